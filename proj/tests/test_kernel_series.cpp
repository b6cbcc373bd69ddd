#include <doctest.h>

#include <cmath>
#include <complex>

#include "bergman/kernel_series.hpp"
#include "oracles.hpp"

using namespace bergman;
using C = std::complex<double>;

namespace {
const double PI = 3.14159265358979323846;
}

TEST_CASE("jet entries are real on the positive real axis") {
    Annulus<double> a(0.25);
    KernelJet<double> J = kernel_jet(a, EvalPoint<double>(0.5));
    for (int az = 0; az < 3; ++az)
        for (int bz = 0; bz < 3; ++bz)
            CHECK(J.entry(az, bz).im == 0.0);
    CHECK(J.k().re > 0);
}

TEST_CASE("kernel matches the orthonormal-basis oracle at a point") {
    Annulus<double> a(0.5);
    KernelJet<double> J = kernel_jet(a, EvalPoint<double>(0.7));
    auto o = basis_kernel_oracle<double>(a, Cx<double>{0.7, 0.0}, Cx<double>{0.7, 0.0}, 300);
    CHECK(o.value.re == doctest::Approx(J.k().re).epsilon(1e-10));
    CHECK(o.tail_estimate < 1e-11);
}

TEST_CASE("small-r kernel expansion at z = sqrt(r)") {
    // pi (K + 1/(pi r log r^2)) = 2 + 4r + 8r^2 + O(r^3); the subtraction
    // cancels the singular term, so run it in extended precision
    using R = Float60;
    R r = R(1) / 1000000;
    Annulus<R> a(r);
    KernelJet<R> J = kernel_jet(a, EvalPoint<R>(sqrt(r)));
    R PIr = pi_const<R>();
    R lhs = PIr * (J.k().re + 1 / (PIr * r * log(r * r)));
    R rhs = 2 + 4 * r + 8 * r * r;
    CHECK(double(abs(lhs - rhs)) < 1e3 * double(r * r * r));
}

TEST_CASE("basis norms: closed values and quadrature oracle") {
    Annulus<double> half(0.5);
    CHECK(basis_norm(-1, half) == doctest::Approx(2 * PI * std::log(2.0)).epsilon(1e-14));
    CHECK(basis_norm(0, half) == doctest::Approx(PI * (1 - 0.25)).epsilon(1e-14));
    CHECK(basis_norm(3, half)
          == doctest::Approx(oracles::basis_norm_quadrature(3, 0.5)).epsilon(1e-12));
    for (int n : {-7, -2, 1, 10})
        CHECK(basis_norm(n, half)
              == doctest::Approx(oracles::basis_norm_quadrature(n, 0.5)).epsilon(1e-10));
    for (int n : {-9000, -3, 0, 5})
        CHECK(log_basis_norm(n, half)
              == doctest::Approx(n < -100 ? std::log(2 * PI / (-2 * n - 2)) + (2 * n + 2) * std::log(0.5)
                                          : std::log(basis_norm(n, half)))
                     .epsilon(1e-12));
}

TEST_CASE("oracle symmetry properties") {
    Annulus<double> a(0.3);
    auto diag = basis_kernel_oracle<double>(a, Cx<double>{0.55, 0.0}, Cx<double>{0.55, 0.0}, 300);
    CHECK(diag.value.im == 0.0);
    CHECK(diag.value.re > 0);

    // rotation: the sum depends on z conj(w) only
    for (double th : {0.3, 1.2, 2.9}) {
        Cx<double> zr{0.55 * std::cos(th), 0.55 * std::sin(th)};
        auto rot = basis_kernel_oracle<double>(a, zr, zr, 300);
        CHECK(rot.value.re == doctest::Approx(diag.value.re).epsilon(1e-13));
        CHECK(std::abs(rot.value.im) < 1e-12);
    }

    // Hermitian symmetry off the diagonal
    auto fw = basis_kernel_oracle<double>(a, Cx<double>{0.4, 0.0}, Cx<double>{0.7, 0.0}, 300);
    auto bw = basis_kernel_oracle<double>(a, Cx<double>{0.7, 0.0}, Cx<double>{0.4, 0.0}, 300);
    CHECK(fw.value.re == doctest::Approx(bw.value.re).epsilon(1e-13));
    CHECK(fw.value.im == doctest::Approx(-bw.value.im).epsilon(1e-13));
}

TEST_CASE("kernel vs oracle across the full grid") {
    for (double r : {0.1, 0.3, 0.5}) {
        Annulus<double> a(r);
        for (int i = 1; i <= 5; ++i) {
            double rho = r + (1 - r) * i / 6.0;
            for (int k = 0; k < 4; ++k) {
                double th = PI * k / 3.1;
                Cx<double> z{rho * std::cos(th), rho * std::sin(th)};
                KernelJet<double> J = kernel_jet(a, EvalPoint<double>(z));
                auto o = basis_kernel_oracle<double>(a, z, z, 400);
                CHECK(std::abs(J.k().re - o.value.re)
                      < 1e-10 * std::abs(o.value.re) + o.tail_estimate + double(J.tail_bound));
            }
        }
    }
}

TEST_CASE("conjugate-pair entries agree with independently summed series") {
    for (double r : {0.2, 0.45}) {
        for (C z : {C(0.5, 0.2), C(-0.3, 0.55), C(0.6, -0.35)}) {
            KernelJet<double> J = oracles::jet_at(r, z);
            CHECK(std::abs(oracles::to_std(J.k1b()) - oracles::conj_series_entry(1, r, z))
                  < 1e-12 * std::abs(oracles::to_std(J.k1b())));
            CHECK(std::abs(oracles::to_std(J.k1b1b()) - oracles::conj_series_entry(2, r, z))
                  < 1e-12 * std::abs(oracles::to_std(J.k1b1b())));
            CHECK(std::abs(oracles::to_std(J.k11b1b()) - oracles::conj_series_entry(3, r, z))
                  < 1e-12 * std::abs(oracles::to_std(J.k11b1b())));
        }
    }
}

TEST_CASE("finite-difference oracle: first derivative with h^2 order") {
    oracles::RealField K = oracles::kernel_field(0.3);
    for (C z : {C(0.55, 0.1), C(-0.2, 0.6)}) {
        C exact = oracles::to_std(oracles::jet_at(0.3, z).k1());
        double e_prev = 0;
        int checked = 0;
        for (double h : {4e-3, 2e-3, 1e-3}) {
            double e = std::abs(oracles::fd_dz(K, z, h) - exact);
            if (e_prev > 0) {
                double order = std::log2(e_prev / e);
                CHECK(order > 1.7);
                CHECK(order < 2.3);
                ++checked;
            }
            e_prev = e;
        }
        CHECK(checked == 2);
    }
}

TEST_CASE("finite-difference oracle: mixed second derivative") {
    oracles::RealField K = oracles::kernel_field(0.3);
    C z(0.5, 0.25);
    double exact = oracles::jet_at(0.3, z).k11b().re;
    double e_prev = 0;
    for (double h : {4e-3, 2e-3, 1e-3}) {
        double e = std::abs(oracles::fd_dz_dzbar(K, z, h) - exact);
        if (e_prev > 0) {
            double order = std::log2(e_prev / e);
            CHECK(order > 1.7);
            CHECK(order < 2.3);
        }
        e_prev = e;
    }
}

TEST_CASE("tightening max_terms stays within the reported tail bound") {
    Annulus<double> a(0.6);
    EvalPoint<double> pt(Cx<double>{0.7, 0.1});
    TruncationPolicy<double> coarse(1e-8, 100000), fine(1e-15, 100000);
    KernelJet<double> Jc = kernel_jet(a, pt, coarse);
    KernelJet<double> Jf = kernel_jet(a, pt, fine);
    for (int az = 0; az < 3; ++az)
        for (int bz = 0; bz < 3; ++bz)
            CHECK(abs(Jc.entry(az, bz) - Jf.entry(az, bz))
                  <= double(Jc.tail_bound) + double(Jf.tail_bound));
    CHECK(Jf.terms_used > Jc.terms_used);
}

TEST_CASE("error paths: outside points and unreachable tolerances") {
    Annulus<double> a(0.4);
    CHECK_THROWS_AS(kernel_jet(a, EvalPoint<double>(0.2)), DomainError);
    CHECK_THROWS_AS(kernel_jet(a, EvalPoint<double>(Cx<double>{1.0, 0.2})), DomainError);
    CHECK_THROWS_AS((basis_kernel_oracle<double>(a, Cx<double>{0.1, 0.0}, Cx<double>{0.5, 0.0}, 50)),
                    DomainError);
    CHECK_THROWS_AS((Annulus<double>(1.2)), DomainError);
    CHECK_THROWS_AS((Annulus<double>(0.0)), DomainError);

    TruncationPolicy<double> impossible(1e-300, 3);
    try {
        kernel_jet(a, EvalPoint<double>(0.7), impossible);
        CHECK(false);
    } catch (const TruncationError& e) {
        CHECK(e.achievable_bound > 1e-300);
        CHECK(e.achievable_bound < 1e3);
    }
}

TEST_CASE("condition estimate grows toward the boundary") {
    Annulus<double> a(0.2);
    KernelJet<double> mid = kernel_jet(a, EvalPoint<double>(0.55));
    KernelJet<double> near = kernel_jet(a, EvalPoint<double>(0.999));
    CHECK(near.condition > 1e10 * mid.condition);
}
