// Acceptance gate: sixteen quantitative criteria, one verdict line each.
// Exits nonzero when any gate fails.

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qho/coherent.hpp"
#include "qho/displacement.hpp"
#include "qho/fock.hpp"
#include "qho/liealg.hpp"
#include "qho/quantize.hpp"
#include "qho/rng.hpp"

using namespace qho;

namespace {

int g_fail = 0;

#define REQUIRE(cond, msg)                                                     \
    do {                                                                       \
        if (!(cond)) {                                                         \
            std::printf("[FAIL] %s:%d %s\n", __FILE__, __LINE__, msg);         \
            ++g_fail;                                                          \
        }                                                                      \
    } while (0)

void verdict(int num, const char* desc, bool ok, double measured) {
    std::printf("[%s] criterion %02d: %s (worst %.3g)\n", ok ? "PASS" : "FAIL",
                num, desc, measured);
    if (!ok) ++g_fail;
}

const double kInvSqrt2 = 0.7071067811865475244008443621048490393;

void crit1_commutator_truncation() {
    double worst = 0.0;
    bool boundary_ok = true;
    for (int n : {8, 24, 64}) {
        LadderPair lp = build_ladder(n);
        QMatrix c = commutator(lp.a, lp.a_dag);
        worst = std::max(worst, interior_max_abs(c - QMatrix::identity(n)));
        Quaternion corner = c.at(n - 1, n - 1);
        if (std::abs(corner.w + (n - 1.0)) > 4e-14 * (n - 1.0) ||
            vec_norm(corner) != 0.0)
            boundary_ok = false;
    }
    verdict(1, "[a, a_dag] = 1 on the interior with boundary entry -(N-1)",
            worst <= 4e-14 && boundary_ok, worst);
}

void crit2_self_adjointness() {
    int n = 16;
    OperatorSet ops = OperatorSet::build(n);
    double worst = max_abs(ops.position - adjoint(ops.position));
    Rng rng(201);
    for (int t = 0; t < 100; ++t) {
        QMatrix p = ops.momentum(rng.unit_imaginary());
        worst = std::max(worst, max_abs(p - adjoint(p)));
    }
    verdict(2, "Q and P_I are exactly self-adjoint", worst == 0.0, worst);
}

void crit3_canonical_pair() {
    int n = 16;
    OperatorSet ops = OperatorSet::build(n);
    Rng rng(202);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        UnitImaginary ax = rng.unit_imaginary();
        QMatrix c = commutator(ops.position, ops.momentum(ax));
        QMatrix target =
            left_scalar_op(ax.as_quaternion(), QMatrix::identity(n));
        worst = std::max(worst, interior_max_abs(c - target));
    }
    verdict(3, "[Q, P_I] = I on the interior block", worst < 1e-13, worst);
}

void crit4_hamiltonian() {
    int n = 16;
    OperatorSet ops = OperatorSet::build(n);
    QMatrix target = ops.number + scale(QMatrix::identity(n), 0.5);
    double s = 1.0 / std::sqrt(3.0);
    double worst = 0.0;
    UnitImaginary fixed[] = {UnitImaginary(1, 0, 0), UnitImaginary(0, 1, 0),
                             UnitImaginary(0, 0, 1), UnitImaginary(s, s, s)};
    for (const auto& ax : fixed)
        worst = std::max(worst,
                         interior_max_abs(ops.hamiltonian(ax) - target));
    Rng rng(203);
    for (int t = 0; t < 100; ++t)
        worst = std::max(worst, interior_max_abs(
                                    ops.hamiltonian(rng.unit_imaginary()) -
                                    target));
    verdict(4, "H_I = N + 1/2 on the interior for every axis", worst < 1e-13,
            worst);
}

void crit5_and_6_coherent() {
    int dim = 64;
    OperatorSet ops = OperatorSet::build(dim);
    Rng rng(204);
    double eig = 0.0, expt = 0.0;
    for (int t = 0; t < 200; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        CoherentState cs = build_cs(q, dim);
        QVector av = apply(ops.a, cs.vec);
        QVector adv = apply(ops.a_dag, cs.vec);
        eig = std::max(eig, max_abs_diff(av, right_scalar_vec(cs.vec, q)));
        double n2 = norm2(q);
        Quaternion qc = conj(q);
        expt = std::max(expt, norm(inner(cs.vec, av) - q));
        expt = std::max(expt, norm(inner(cs.vec, adv) - qc));
        expt = std::max(expt, norm(inner(av, av) - Quaternion::real(n2)));
        expt = std::max(expt,
                        norm(inner(adv, adv) - Quaternion::real(1.0 + n2)));
        expt = std::max(expt, norm(inner(av, adv) - qc * qc));
        expt = std::max(expt, norm(inner(adv, av) - q * q));
    }
    verdict(5, "a gamma_q = gamma_q q over 200 draws at N = 64", eig < 1e-10,
            eig);
    verdict(6, "six ladder expectations match closed forms", expt < 1e-10,
            expt);
}

void crit7_global_uncertainty() {
    int dim = 64;
    Rng rng(205);
    double varq = 0.0, margin = -1.0;
    for (int t = 0; t < 1000; ++t) {
        Quaternion q = rng.quaternion_in_ball(0.4);
        UnitImaginary ax = rng.unit_imaginary();
        UncertaintyReport rep = uncertainty_global(q, ax, dim);
        varq = std::max(varq, std::abs(rep.varQ - 0.5));
        margin = std::max(margin, rep.bound_residual - norm2(q));
    }
    Quaternion dir = rng.quaternion_in_ball(1.0);
    while (norm(dir) < 1e-3) dir = rng.quaternion_in_ball(1.0);
    dir = (1.0 / norm(dir)) * dir;
    UnitImaginary ax = rng.unit_imaginary();
    double prev = -1.0, growth = -1.0, radius = 0.4;
    for (int k = 0; k <= 6; ++k) {
        UncertaintyReport rep = uncertainty_global(radius * dir, ax, dim);
        if (k > 0) growth = std::max(growth, rep.bound_residual - prev);
        prev = rep.bound_residual;
        radius *= 0.5;
    }
    bool ok = varq < 1e-10 && margin <= 1e-12 && growth <= 1e-12;
    verdict(7, "varQ = 1/2 and | |dQ|^2|dP|^2 - 1/4 | <= |q|^2 with monotone "
               "approach to 1/4",
            ok, std::max(varq, margin));
}

void crit8_slice_saturation() {
    int dim = 64;
    Rng rng(206);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        while (vec_norm(q) < 1e-3) q = rng.quaternion_in_ball(1.0);
        UncertaintyReport rep = uncertainty_slice(q, dim);
        worst = std::max(worst, std::abs(rep.product - 0.25));
        worst = std::max(worst,
                         std::abs(0.5 * norm(rep.commutator_mean) - 0.5));
    }
    verdict(8, "slice-axis product saturates: dQ dP = |<[Q,P]>|/2 = 1/2",
            worst < 1e-9, worst);
}

void crit9_c_series() {
    Rng rng(207);
    double worst = 0.0, mag = -1.0;
    for (int t = 0; t < 200; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        UnitImaginary ax = rng.unit_imaginary();
        Quaternion c = c_series(q, ax);
        worst = std::max(worst, norm(conj(c) + c));
        worst = std::max(worst, norm(c * c + Quaternion::real(norm2(c))));
        mag = std::max(mag, norm(c) - 1.0);

        Quaternion qn = q;
        while (vec_norm(qn) < 1e-3) qn = rng.quaternion_in_ball(1.0);
        UnitImaginary iq = slice_decompose(qn).axis;
        worst = std::max(worst, norm(c_series(qn, iq) - iq.as_quaternion()));
        Quaternion qr = Quaternion::real(rng.uniform(-1.0, 1.0));
        worst = std::max(worst, norm(c_series(qr, ax) - ax.as_quaternion()));
    }
    bool ok = worst < 1e-12 && mag <= 1e-12;
    verdict(9, "c_I(q) is imaginary with |c| <= 1 and the right fixed points",
            ok, std::max(worst, mag));
}

QuadratureGrid main_grid() {
    MeasureSpec spec;
    spec.n_r = 64;
    spec.n_theta = 32;
    spec.n_phi = 8;
    spec.n_psi = 8;
    return grid_build(spec);
}

void crit10_quadrature(const QuadratureGrid& grid) {
    double worst = 0.0;
    double fact = 1.0;
    for (int m = 0; m <= 10; ++m) {
        if (m > 0) fact *= m;
        worst = std::max(worst,
                         std::abs(radial_moment(grid, m) - fact) / fact);
    }
    double res = resolution_check(12, grid);
    bool ok = worst < 1e-10 && res < 1e-8;
    verdict(10, "radial moments are exact and coherent projectors resolve "
                "the identity",
            ok, std::max(worst, res));
}

void crit11_quantization(const QuadratureGrid& grid) {
    int dim = 12;
    OperatorSet ops = OperatorSet::build(dim);
    double worst = max_abs(quantize_symbol(symbol_one(), dim, grid) -
                           QMatrix::identity(dim));
    worst = std::max(worst,
                     max_abs(quantize_symbol(symbol_q(), dim, grid) - ops.a));
    worst = std::max(
        worst, max_abs(quantize_symbol(symbol_qbar(), dim, grid) - ops.a_dag));
    worst = std::max(worst,
                     max_abs(quantize_symbol(symbol_abs2(), dim, grid) -
                             (ops.number + QMatrix::identity(dim))));
    verdict(11, "symbols 1, q, conj(q), |q|^2 quantize to 1, a, a_dag, N+1",
            worst < 1e-8, worst);
}

void crit12_lie_axioms() {
    double worst = 0.0;
    for (BracketKind kind : {BracketKind::Sigma, BracketKind::Hat,
                             BracketKind::H, BracketKind::Tau})
        worst = std::max(worst,
                         axiom_suite(kind, 10000, 208).max_residual());
    Rng rng(209);
    double hom = 0.0;
    for (int t = 0; t < 100; ++t) {
        AlgElementA a, b;
        for (int k = 0; k < 3; ++k) {
            a.x[k] = rng.uniform(-1.0, 1.0);
            b.x[k] = rng.uniform(-1.0, 1.0);
            a.z[k] = rng.uniform(-1.0, 1.0);
            b.z[k] = rng.uniform(-1.0, 1.0);
        }
        a.y = rng.uniform(-1.0, 1.0);
        b.y = rng.uniform(-1.0, 1.0);
        hom = std::max(hom, embedding_homomorphism_residual(a, b));
    }
    bool ok = worst < 1e-12 && hom < 1e-13;
    verdict(12, "Lie axioms hold for all four brackets and the slice "
                "embedding is a homomorphism",
            ok, std::max(worst, hom));
}

void crit13_displacement_basics() {
    int dim = 64;
    Rng rng(210);
    double gen = 0.0, uni = 0.0, ord = 0.0, par = 0.0, shf = 0.0;
    for (int t = 0; t < 6; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        DisplacementOp d = build_D(q, dim);
        gen = std::max(gen, cs_generation_residual(d));
        uni = std::max(uni, unitarity_residual(d));
        OrderingResiduals orr = ordering_residuals(d);
        ord = std::max(ord, orr.normal_vs_exp);
        ord = std::max(ord, orr.antinormal_vs_exp);
        ord = std::max(ord, orr.normal_vs_antinormal);
        if (t < 3) par = std::max(par, parity_conjugation_residual(d));
    }
    for (int t = 0; t < 4; ++t) {
        ShiftResiduals sr = shift_residual(rng.quaternion_in_ball(0.5), dim);
        shf = std::max(shf, std::max(sr.pos_a, sr.pos_adag));
    }
    bool ok = gen < 1e-8 && uni < 1e-9 && ord < 1e-8 && par < 1e-9 &&
              shf < 1e-7;
    verdict(13, "D(q) is unitary, generates gamma_q, matches ordered forms, "
                "parity and shifts",
            ok, std::max(std::max(gen, uni), std::max(ord, shf)));
}

void crit14_pair_relations() {
    int dim = 64;
    Rng rng(211);
    double rig = 0.0, wslice = 0.0, wgen = 0.0;
    for (int t = 0; t < 6; ++t) {
        Quaternion q = rng.quaternion_in_ball(0.5);
        Quaternion p = rng.quaternion_in_ball(0.5);
        PairResiduals r = pair_residuals(q, p, dim, PhaseSide::Left);
        rig = std::max(rig, r.slice_rigorous.composition);
        rig = std::max(rig, r.slice_rigorous.projective);
        rig = std::max(rig, r.slice_rigorous.covariance);
        wslice = std::max(wslice, r.slice_wedge.composition);
        wgen = std::max(wgen, r.general_wedge.composition);
    }
    verdict(14, "same-slice composition, projective and covariance laws "
                "hold with the central phase",
            rig < 1e-7, rig);
    std::printf("[info] criterion 14 measured: wedge-phase residual "
                "same-slice %.3g, cross-slice %.3g\n",
                wslice, wgen);
}

void crit15_derivatives() {
    Rng rng(212);
    double lo = 10.0, hi = 0.0;
    for (int t = 0; t < 50; ++t) {
        SlicePoint sp;
        sp.x = rng.uniform(-0.5, 0.5);
        sp.y = rng.uniform(0.05, 0.5);
        sp.axis = rng.unit_imaginary();
        SliceDerivativeCheck chk = slice_derivative_residual(sp, 1e-3, 32);
        lo = std::min(lo, std::min(chk.ratio_i(), chk.ratio_ii()));
        hi = std::max(hi, std::max(chk.ratio_i(), chk.ratio_ii()));
    }
    bool ok = lo >= 3.5 && hi <= 4.5;
    verdict(15, "slice derivative defects scale at second order "
                "(halving h shrinks them 4x)",
            ok, hi);
}

void crit16_square_integrability() {
    MeasureSpec sspec;
    sspec.n_r = 64;
    sspec.n_theta = 24;
    sspec.n_phi = 6;
    sspec.n_psi = 6;
    QuadratureGrid sgrid = grid_build(sspec);
    double dev = square_integrability_deviation(24, 12, sgrid);

    MeasureSpec aspec;
    aspec.n_r = 40;
    aspec.n_theta = 24;
    aspec.n_phi = 4;
    aspec.n_psi = 4;
    QuadratureGrid agrid = grid_build(aspec);
    int dim = 32;
    QVector e0 = QVector::basis(dim, 0);
    Rng rng(213);
    // The invariance proof moves D(p) through D(q) with a unimodular
    // phase, which requires q and p to share a slice.  Real p lie in every
    // slice, so there the identity is rigorous and gated; for generic p
    // the exchange relation itself fails off-slice, and the deviation is
    // measured and reported (it is truncation-independent).
    double inv = std::abs(admissibility_integral(e0, agrid) - 1.0);
    for (int t = 0; t < 20; ++t) {
        Quaternion p = Quaternion::real(rng.uniform(-1.0, 1.0));
        QVector eta = apply_displacement(p, e0);
        inv = std::max(inv,
                       std::abs(admissibility_integral(eta, agrid) - 1.0));
    }
    double gen = 0.0;
    for (int t = 0; t < 20; ++t) {
        Quaternion p = rng.quaternion_in_ball(1.0);
        QVector eta = apply_displacement(p, e0);
        gen = std::max(gen,
                       std::abs(admissibility_integral(eta, agrid) - 1.0));
    }
    bool ok = dev < 1e-8 && inv < 1e-6;
    verdict(16, "square integrability: identity resolution and "
                "admissibility invariant under every-slice displacements",
            ok, std::max(dev, inv));
    std::printf("[info] criterion 16 measured: off-slice transported "
                "admissibility deviates by up to %.3g over 20 random p "
                "(the exchange relation underlying the invariance argument "
                "holds only slice-wise; see criterion 14)\n",
                gen);
}

} // namespace

int main() {
    crit1_commutator_truncation();
    crit2_self_adjointness();
    crit3_canonical_pair();
    crit4_hamiltonian();
    crit5_and_6_coherent();
    crit7_global_uncertainty();
    crit8_slice_saturation();
    crit9_c_series();
    QuadratureGrid grid = main_grid();
    crit10_quadrature(grid);
    crit11_quantization(grid);
    crit12_lie_axioms();
    crit13_displacement_basics();
    crit14_pair_relations();
    crit15_derivatives();
    crit16_square_integrability();

    // Exact-arithmetic spot checks backing the gates above.
    LadderPair lp = build_ladder(8);
    REQUIRE(max_abs(lp.a_dag - adjoint(lp.a)) == 0.0,
            "a_dag must be the exact adjoint of a");
    QMatrix p0 = scale(lp.a_dag - lp.a, kInvSqrt2);
    for (int t = 0; t < 3; ++t) {
        QMatrix pt = build_momentum(8, tau_axis(t));
        REQUIRE(max_abs(p0 + left_scalar_op(tau_quat(t), pt)) == 0.0,
                "P_0 must equal -tau P_tau exactly");
    }

    if (g_fail == 0) {
        std::printf("acceptance: all 16 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d failure(s)\n", g_fail);
    return 1;
}
