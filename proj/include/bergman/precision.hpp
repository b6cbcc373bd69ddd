#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <limits>
#include <stdexcept>

namespace bergman {

namespace mp = boost::multiprecision;

// Extended-precision real types. double covers the standard (~16 digit) mode;
// the wider types back the asymptotic-extraction paths, where leading-order
// cancellations consume tens of digits before the quantity of interest emerges.
using Float60  = mp::number<mp::cpp_bin_float<60>,  mp::et_off>;
using Float80  = mp::number<mp::cpp_bin_float<80>,  mp::et_off>;
using Float120 = mp::number<mp::cpp_bin_float<120>, mp::et_off>;

template <class R> inline R pi_const();
template <> inline double pi_const<double>() { return 3.141592653589793238462643383279502884; }
template <> inline Float60 pi_const<Float60>() { return mp::default_ops::get_constant_pi<Float60::backend_type>(); }
template <> inline Float80 pi_const<Float80>() { return mp::default_ops::get_constant_pi<Float80::backend_type>(); }
template <> inline Float120 pi_const<Float120>() { return mp::default_ops::get_constant_pi<Float120::backend_type>(); }

template <class R> inline R real_eps() { return std::numeric_limits<R>::epsilon(); }

template <class R> inline constexpr int decimal_digits() { return std::numeric_limits<R>::digits10; }

// Runtime digit request -> compile-time mode. Rounds up to the nearest
// available width; beyond 120 digits there is no instantiation.
template <class F>
decltype(auto) with_precision(int digits, F&& f) {
    if (digits <= 16) return f(double{});
    if (digits <= 60) return f(Float60{});
    if (digits <= 80) return f(Float80{});
    if (digits <= 120) return f(Float120{});
    throw std::invalid_argument("precision-digits above 120 is not supported (available: 16/60/80/120)");
}

} // namespace bergman
