#include "solver.hpp"
#include "numbthy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace modrep {

namespace {
const double PI = 3.14159265358979323846;
}

CMat CMat::identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat CMat::mul(const CMat& o) const {
    CMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            cplx v = at(i, k);
            if (v == cplx(0)) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

CMat CMat::dagger() const {
    CMat r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

CMat CMat::scaled(cplx s) const {
    CMat r = *this;
    for (auto& v : r.a) v *= s;
    return r;
}

CMat CMat::sub(const CMat& o) const {
    CMat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

CMat CMat::add(const CMat& o) const {
    CMat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

CMat CMat::pow(i64 k) const {
    CMat r = identity(n), b = *this;
    while (k > 0) {
        if (k & 1) r = r.mul(b);
        b = b.mul(b);
        k >>= 1;
    }
    return r;
}

double CMat::fro() const {
    double s = 0;
    for (auto& v : a) s += std::norm(v);
    return std::sqrt(s);
}

double CMat::unitarity_defect() const {
    return mul(dagger()).sub(identity(n)).fro();
}

CMat qr_orthonormalize(const CMat& m) {
    // modified Gram-Schmidt on columns
    CMat q = m;
    int n = m.n;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx dot = 0;
            for (int i = 0; i < n; ++i) dot += std::conj(q.at(i, k)) * q.at(i, j);
            for (int i = 0; i < n; ++i) q.at(i, j) -= dot * q.at(i, k);
        }
        double nrm = 0;
        for (int i = 0; i < n; ++i) nrm += std::norm(q.at(i, j));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) throw std::runtime_error("degenerate frame in orthonormalization");
        for (int i = 0; i < n; ++i) q.at(i, j) /= nrm;
    }
    return q;
}

CMat sym_square(const CMat& m) {
    if (m.n != 2) throw MError("DimensionMismatch", "sym_square expects a 2x2 matrix");
    const double s2 = std::sqrt(2.0);
    cplx a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    CMat r(3);
    r.at(0, 0) = a * a;      r.at(0, 1) = s2 * a * b;        r.at(0, 2) = b * b;
    r.at(1, 0) = s2 * a * c; r.at(1, 1) = a * d + b * c;     r.at(1, 2) = s2 * b * d;
    r.at(2, 0) = c * c;      r.at(2, 1) = s2 * c * d;        r.at(2, 2) = d * d;
    return r;
}

void ClassSpec::validate() const {
    if (rank < 2 || rank > 3) throw MError("DimensionMismatch", "rank must be 2 or 3");
    Rat total(0);
    for (auto& v : angles) {
        if (i64(v.size()) != rank)
            throw MError("DimensionMismatch", "each generator needs rank eigenangles");
        for (auto& t : v) total += t;
    }
    if (central_sign == -1) total -= Rat(rank);
    Rat half = total * Rat(1, 2);
    if (!half.is_integer())
        throw MError("InfeasibleSpec", "determinant condition fails for class data");
}

namespace {

struct State {
    std::array<CMat, 3> u;
    std::array<CMat, 3> d;  // fixed diagonals
    CMat target;

    std::array<CMat, 3> mats() const {
        std::array<CMat, 3> a;
        for (int i = 0; i < 3; ++i) a[i] = u[i].mul(d[i]).mul(u[i].dagger());
        return a;
    }
    double loss() const {
        auto a = mats();
        return a[0].mul(a[1]).mul(a[2]).sub(target).fro();
    }
};

// Euclidean gradient of ||A1 A2 A3 - T||_F^2 with respect to U_i, where
// A_i = U_i D_i U_i^H (Wirtinger convention: df = 2 Re tr(G^H dU))
std::array<CMat, 3> gradient(const State& st) {
    auto a = st.mats();
    CMat e = a[0].mul(a[1]).mul(a[2]).sub(st.target);
    std::array<CMat, 3> g;
    std::array<CMat, 3> w;
    w[0] = a[1].mul(a[2]).mul(e.dagger());
    w[1] = a[2].mul(e.dagger()).mul(a[0]);
    w[2] = e.dagger().mul(a[0]).mul(a[1]);
    for (int i = 0; i < 3; ++i) {
        CMat t1 = w[i].dagger().mul(st.u[i]).mul(st.d[i].dagger());
        CMat t2 = w[i].mul(st.u[i]).mul(st.d[i]);
        g[i] = t1.add(t2);
    }
    return g;
}

// project to the tangent space of the unitary group at U (skew projection)
CMat tangent_project(const CMat& u, const CMat& g) {
    CMat ug = u.dagger().mul(g);
    CMat sym(ug.n);
    for (int i = 0; i < ug.n; ++i)
        for (int j = 0; j < ug.n; ++j)
            sym.at(i, j) = 0.5 * (ug.at(i, j) + std::conj(ug.at(j, i)));
    return g.sub(u.mul(sym));
}

} // namespace

SolveReport solve_triple(const ClassSpec& spec, const SolveConfig& cfg) {
    spec.validate();
    int n = spec.rank;
    SolveReport rep;
    rep.seed = cfg.seed;
    rep.residual = 1e300;

    State st;
    st.target = CMat::identity(n).scaled(double(spec.central_sign));
    for (int i = 0; i < 3; ++i) {
        st.d[i] = CMat(n);
        for (int j = 0; j < n; ++j) {
            double th = PI * spec.angles[i][j].to_double();
            st.d[i].at(j, j) = cplx(std::cos(th), std::sin(th));
        }
    }

    for (int start = 0; start < cfg.starts; ++start) {
        ++rep.starts_used;
        std::mt19937 rng(cfg.seed + 0x9e3779b9u * unsigned(start));
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (int i = 0; i < 3; ++i) {
            CMat m(n);
            for (auto& v : m.a) v = cplx(unif(rng), unif(rng));
            st.u[i] = qr_orthonormalize(m);
        }

        double step = 0.1;
        const double momentum = 0.9;
        std::array<CMat, 3> vel{CMat(n), CMat(n), CMat(n)};
        double f = st.loss();
        for (int it = 0; it < cfg.max_iters && f > cfg.tol; ++it) {
            ++rep.iterations;
            auto g = gradient(st);
            std::array<CMat, 3> dir;
            for (int i = 0; i < 3; ++i) dir[i] = tangent_project(st.u[i], g[i]);
            // backtracking on the momentum-free step, momentum applied on accept
            State trial = st;
            double fnew = 0;
            bool accepted = false;
            for (int bt = 0; bt < 30; ++bt) {
                for (int i = 0; i < 3; ++i) {
                    CMat v = vel[i].scaled(momentum).sub(dir[i].scaled(step));
                    trial.u[i] = qr_orthonormalize(st.u[i].add(v));
                }
                fnew = trial.loss();
                if (fnew < f) { accepted = true; break; }
                step *= 0.5;
                for (auto& v : vel) v = CMat(n);  // reset momentum when stuck
                if (step < 1e-18) break;
            }
            if (!accepted) break;
            for (int i = 0; i < 3; ++i) {
                // record applied displacement as the new velocity
                vel[i] = trial.u[i].sub(st.u[i]);
            }
            st.u = trial.u;
            f = fnew;
            step *= 1.05;
        }
        if (f < rep.residual) rep.residual = f;
        if (f <= cfg.tol) {
            rep.converged = true;
            UnitaryTuple t;
            auto a = st.mats();
            for (int i = 0; i < 3; ++i) t.a[i] = a[i];
            rep.tuple = t;
            // spectral match is exact by construction; record unitarity defects
            rep.spectral_gap = {t.a[0].unitarity_defect(), t.a[1].unitarity_defect(),
                                t.a[2].unitarity_defect()};
            break;
        }
    }
    return rep;
}

std::vector<double> verify_relations(const UnitaryTuple& t, const DyckSignature& sig,
                                     const CentralExtensionData& ext, int central_sign) {
    if (sig.n() != 3) throw MError("DimensionMismatch", "triangle signatures only");
    int n = t.a[0].n;
    for (auto& m : t.a)
        if (m.n != n) throw MError("DimensionMismatch", "mixed ranks in tuple");
    std::vector<double> res;
    for (int i = 0; i < 3; ++i) {
        double sgn = (ext.b_i[i] % 2 == 0) ? 1.0 : double(central_sign);
        res.push_back(t.a[i].pow(sig.e[i]).sub(CMat::identity(n).scaled(sgn)).fro());
    }
    double sgn = (ext.b % 2 == 0) ? 1.0 : double(central_sign);
    res.push_back(t.a[0].mul(t.a[1]).mul(t.a[2]).sub(CMat::identity(n).scaled(sgn)).fro());
    return res;
}

bool irreducibility(const UnitaryTuple& t) {
    int n = t.a[0].n;
    int N = n * n;
    // commutant: A X - X A = 0 for all three; stack (I x A - A^T x I)
    // and count the null space of the normal matrix by Jacobi eigenvalues
    std::vector<std::vector<cplx>> rows;
    for (auto& m : t.a) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                std::vector<cplx> row(N, cplx(0));
                // (A X)_{rc} = sum_k A_{rk} X_{kc}; (X A)_{rc} = sum_k X_{rk} A_{kc}
                for (int k = 0; k < n; ++k) {
                    row[k * n + c] += m.at(r, k);
                    row[r * n + k] -= m.at(k, c);
                }
                rows.push_back(std::move(row));
            }
    }
    // rank of the stacked system by Gaussian elimination with partial
    // pivoting; null space dimension = commutant dimension
    double maxabs = 0;
    for (auto& row : rows)
        for (auto& v : row) maxabs = std::max(maxabs, std::abs(v));
    const double tol = std::max(maxabs, 1.0) * 1e-8;
    int rank = 0;
    int nrows = int(rows.size());
    for (int col = 0; col < N && rank < nrows; ++col) {
        int piv = -1;
        double best = tol;
        for (int r = rank; r < nrows; ++r)
            if (std::abs(rows[r][col]) > best) { best = std::abs(rows[r][col]); piv = r; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        cplx inv = 1.0 / rows[rank][col];
        for (int j = col; j < N; ++j) rows[rank][j] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            cplx f = rows[r][col];
            if (std::abs(f) == 0) continue;
            for (int j = col; j < N; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return N - rank == 1;
}

ClassSpec census_spec(i64 p, i64 k) {
    ModularData md = modular_data(p);
    if (p < 7 || k <= 0 || k >= p) throw MError("IndexOutOfRange", "need 0 < k < p, p >= 7");
    bool want_odd = md.epsilon == 1;
    if ((k % 2 != 0) != want_odd)
        throw MError("IndexOutOfRange", "k has the wrong parity for this prime");
    CentralExtensionData ext = central_extension(DyckSignature{{2, 3, p}});
    // the enumerated rotation number matches the parity of b_3; the canonical
    // k differs from it exactly when those parities disagree
    bool flip = (mod_pos(k, 2) != mod_pos(ext.b_i[2], 2));
    int base = (ext.b % 2 == 0) ? 1 : -1;  // eta = -1 on the centre
    int target = base * (flip ? -1 : 1);

    ClassSpec spec;
    spec.rank = 2;
    spec.central_sign = target;
    spec.angles[0] = {Rat(1, 2), Rat(-1, 2)};
    Rat t2(3 - md.epsilon, 6);
    spec.angles[1] = {t2, -t2};
    spec.angles[2] = {Rat(k, p), Rat(-k, p)};
    return spec;
}

CentralExtensionData census_presentation(i64 p, i64 k) {
    CentralExtensionData ext = central_extension(DyckSignature{{2, 3, p}});
    bool flip = (mod_pos(k, 2) != mod_pos(ext.b_i[2], 2));
    if (flip) {
        ext.b_i[2] += p;
        ext.b += 1;
    }
    return ext;
}

std::vector<ClassSpec> rank3_specs_p7() {
    auto wrap = [](std::initializer_list<Rat> v) { return std::vector<Rat>(v); };
    std::vector<ClassSpec> out;
    auto base = [&]() {
        ClassSpec s;
        s.rank = 3;
        s.central_sign = 1;
        s.angles[0] = wrap({Rat(0), Rat(1), Rat(1)});
        s.angles[1] = wrap({Rat(0), Rat(2, 3), Rat(4, 3)});
        return s;
    };
    {
        ClassSpec s = base();  // Sym^2 of the k = 5 point
        s.angles[2] = wrap({Rat(0), Rat(10, 7), Rat(4, 7)});
        out.push_back(s);
    }
    {
        ClassSpec s = base();  // Sym^2 of the k = 3 point
        s.angles[2] = wrap({Rat(0), Rat(6, 7), Rat(8, 7)});
        out.push_back(s);
    }
    {
        ClassSpec s = base();  // 3-dimensional irreducible, one orientation
        s.angles[2] = wrap({Rat(2, 7), Rat(4, 7), Rat(8, 7)});
        out.push_back(s);
    }
    {
        ClassSpec s = base();  // its conjugate orientation
        s.angles[2] = wrap({Rat(12, 7), Rat(10, 7), Rat(6, 7)});
        out.push_back(s);
    }
    return out;
}

} // namespace modrep
