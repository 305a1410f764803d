#include "g2/analytic.hpp"

#include "g2/errors.hpp"

#include <cmath>

namespace g2 {

namespace {

// Period data on four cycles (A1, A2, B1, B2) for the two differentials.
struct PeriodState {
    std::array<std::array<Complex, 4>, 2> pi;
    Mat4i g;

    CMat2 big() const {
        CMat2 m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = pi[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return m;
    }
    CMat2 small() const {
        CMat2 m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = pi[static_cast<size_t>(i)][static_cast<size_t>(j + 2)];
        return m;
    }
    CMat2 tau() const { return big().inverse() * small(); }

    // New cycles are G times the current ones.
    void apply(const Mat4i& G) {
        std::array<std::array<Complex, 4>, 2> np;
        for (int r = 0; r < 2; ++r)
            for (int i = 0; i < 4; ++i) {
                Complex acc(Real(pi[0][0].prec(), 0), Real(pi[0][0].prec(), 0));
                for (int j = 0; j < 4; ++j) {
                    long gij = G[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (gij != 0) acc += pi[static_cast<size_t>(r)][static_cast<size_t>(j)] * Real(gij);
                }
                np[static_cast<size_t>(r)][static_cast<size_t>(i)] = acc;
            }
        pi = std::move(np);
        Mat4i ng{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) ng[i][j] += G[i][k] * g[k][j];
        g = ng;
    }
};

Mat4i identity4() {
    Mat4i m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

// tau -> U tau U^T with B' = U B and A' = U^{-T} A.
Mat4i unimodular_move(const std::array<std::array<long, 2>, 2>& U) {
    long det = U[0][0] * U[1][1] - U[0][1] * U[1][0];
    std::array<std::array<long, 2>, 2> inv{{{U[1][1] * det, -U[0][1] * det}, {-U[1][0] * det, U[0][0] * det}}};
    Mat4i G{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            G[i][j] = inv[j][i];
            G[i + 2][j + 2] = U[i][j];
        }
    return G;
}

// tau -> tau + S with B' = B + S A.
Mat4i translation_move(long s11, long s12, long s22) {
    Mat4i G = identity4();
    G[2][0] = s11;
    G[2][1] = s12;
    G[3][0] = s12;
    G[3][1] = s22;
    return G;
}

// A1' = B1, B1' = -A1.
Mat4i inversion_move() {
    Mat4i G = identity4();
    G[0][0] = 0;
    G[0][2] = 1;
    G[2][2] = 0;
    G[2][0] = -1;
    return G;
}

double d(const Real& x) { return x.to_double(); }

void minkowski(PeriodState& st, double slack, int& moves, int max_moves) {
    for (int it = 0; it < max_moves; ++it) {
        CMat2 t = st.tau();
        double y1 = d(t(0, 0).im()), y2 = d(t(1, 1).im()), y12 = d(t(0, 1).im());
        if (y1 > y2 + slack) {
            st.apply(unimodular_move({{{0, 1}, {1, 0}}}));
            ++moves;
            continue;
        }
        if (2 * std::fabs(y12) > y1 + slack) {
            long k = std::lround(y12 / y1);
            st.apply(unimodular_move({{{1, 0}, {-k, 1}}}));
            ++moves;
            continue;
        }
        return;
    }
    throw ReductionStall("Minkowski reduction did not terminate");
}

void translate(PeriodState& st, int& moves) {
    CMat2 t = st.tau();
    long s11 = std::lround(d(t(0, 0).re())), s12 = std::lround(d(t(0, 1).re())), s22 = std::lround(d(t(1, 1).re()));
    if (s11 == 0 && s12 == 0 && s22 == 0) return;
    st.apply(translation_move(-s11, -s12, -s22));
    ++moves;
}

SiegelResult reduce_state(PeriodState& st, const SiegelOptions& opt) {
    int moves = 0;
    bool done = false;
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        minkowski(st, opt.slack, moves, 1000);
        translate(st, moves);
        CMat2 t = st.tau();
        if (d(abs(t(0, 0))) < 1.0 - opt.slack) {
            st.apply(inversion_move());
            ++moves;
            continue;
        }
        done = true;
        break;
    }
    if (!done) throw ReductionStall("Siegel reduction exceeded the sweep budget");
    CMat2 t = st.tau();
    if (t(0, 1).im().sign() < 0) {
        st.apply(unimodular_move({{{1, 0}, {0, -1}}}));
        ++moves;
    }
    SiegelResult r;
    r.tau = st.tau();
    // symmetrize
    Complex avg = (r.tau(0, 1) + r.tau(1, 0)) * Real::with_prec(0.5, r.tau(0, 1).prec());
    r.tau(0, 1) = avg;
    r.tau(1, 0) = avg;
    r.transform = st.g;
    r.moves = moves;
    if (!check_reduced(r.tau, opt.slack).ok()) throw ReductionStall("reduced matrix fails the domain inequalities");
    return r;
}

}  // namespace

ReductionCheck check_reduced(const CMat2& tau, double slack) {
    ReductionCheck c;
    double x1 = d(tau(0, 0).re()), x12 = d(tau(0, 1).re()), x2 = d(tau(1, 1).re());
    double y1 = d(tau(0, 0).im()), y12 = d(tau(0, 1).im()), y2 = d(tau(1, 1).im());
    c.real_parts = std::fabs(x1) <= 0.5 + slack && std::fabs(x12) <= 0.5 + slack && std::fabs(x2) <= 0.5 + slack;
    c.minkowski = y2 >= y1 - slack && y1 >= 2 * y12 - slack && y12 >= 0.0;
    c.im_tau1 = y1 >= std::sqrt(3.0) / 2 - slack;
    return c;
}

SiegelResult reduce_siegel(const CMat2& tau, const SiegelOptions& opt) {
    mpfr_prec_t p = tau(0, 0).prec();
    PrecisionScope scope(p);
    PeriodState st;
    CMat2 I = CMat2::identity(p);
    for (int r = 0; r < 2; ++r)
        for (int j = 0; j < 2; ++j) {
            st.pi[static_cast<size_t>(r)][static_cast<size_t>(j)] = I(r, j);
            st.pi[static_cast<size_t>(r)][static_cast<size_t>(j + 2)] = tau(r, j);
        }
    st.g = identity4();
    return reduce_state(st, opt);
}

// Used by compute_periods: reduces a full period matrix and returns the new periods.
SiegelResult reduce_periods(CMat2& big, CMat2& small, const SiegelOptions& opt) {
    PeriodState st;
    for (int r = 0; r < 2; ++r)
        for (int j = 0; j < 2; ++j) {
            st.pi[static_cast<size_t>(r)][static_cast<size_t>(j)] = big(r, j);
            st.pi[static_cast<size_t>(r)][static_cast<size_t>(j + 2)] = small(r, j);
        }
    st.g = identity4();
    SiegelResult res = reduce_state(st, opt);
    big = st.big();
    small = st.small();
    return res;
}

}  // namespace g2
