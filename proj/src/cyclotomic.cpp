#include "cyclotomic.hpp"
#include "numbthy.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace modrep {

namespace {

struct PrimePowerInfo {
    i64 P;      // q^e
    i64 phi;    // phi(q^e)
    i64 step;   // q^(e-1)
    i64 q;
    i64 shift;  // t with t = 1 mod P, t = 0 mod m/P (CRT unit vector)
};

struct FieldInfo {
    i64 m;
    std::vector<PrimePowerInfo> pps;
};

const FieldInfo& field_info(i64 m) {
    static std::mutex mu;
    static std::unordered_map<i64, std::unique_ptr<FieldInfo>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
    auto fi = std::make_unique<FieldInfo>();
    fi->m = m;
    for (auto& [q, e] : factorize(m)) {
        PrimePowerInfo pp;
        pp.q = q;
        pp.P = 1;
        for (int i = 0; i < e; ++i) pp.P *= q;
        pp.step = pp.P / q;
        pp.phi = pp.P - pp.step;
        i64 rest = m / pp.P;
        pp.shift = (rest == 1) ? 1 : mod_pos(i128(rest) * invmod(rest, pp.P) % m, m);
        fi->pps.push_back(pp);
    }
    auto& ref = *fi;
    cache[m] = std::move(fi);
    return ref;
}

} // namespace

void Cyc::canonicalize(i64 m, std::unordered_map<i64, Rat>& acc,
                       std::vector<std::pair<i64, Rat>>& out) {
    out.clear();
    if (m == 1) {
        Rat total(0);
        for (auto& [k, c] : acc) total += c;
        if (!total.is_zero()) out.push_back({0, total});
        return;
    }
    const FieldInfo& fi = field_info(m);
    std::vector<std::pair<i64, Rat>> work(acc.begin(), acc.end());
    std::unordered_map<i64, Rat> done;
    while (!work.empty()) {
        auto [k, c] = work.back();
        work.pop_back();
        if (c.is_zero()) continue;
        bool reduced = true;
        for (auto& pp : fi.pps) {
            i64 j = k % pp.P;
            if (j >= pp.phi) {
                // zeta_P^j = -sum_{i=1}^{q-1} zeta_P^{j - i*step}
                for (i64 i = 1; i < pp.q; ++i) {
                    i64 jj = j - i * pp.step;
                    i64 delta = mod_pos(jj - j, m);
                    i64 kk = i64((i128(delta) * pp.shift + k) % m);
                    work.push_back({kk, -c});
                }
                reduced = false;
                break;
            }
        }
        if (reduced) done[k] += c;
    }
    for (auto& [k, c] : done)
        if (!c.is_zero()) out.push_back({k, c});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

Cyc Cyc::root(i64 m, i64 k, const Rat& scale) {
    Cyc r;
    if (scale.is_zero()) return r;
    r.mod_ = m;
    std::unordered_map<i64, Rat> acc;
    acc[mod_pos(k, m)] = scale;
    canonicalize(m, acc, r.terms_);
    if (r.terms_.empty()) r.mod_ = 1;
    return r;
}

Cyc Cyc::lifted(i64 M) const {
    if (M == mod_) return *this;
    Cyc r;
    r.mod_ = M;
    i64 f = M / mod_;
    r.terms_.reserve(terms_.size());
    std::unordered_map<i64, Rat> acc;
    for (auto& [k, c] : terms_) acc[k * f] += c;
    canonicalize(M, acc, r.terms_);
    return r;
}

bool Cyc::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rat Cyc::rational() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
    throw std::domain_error("cyclotomic value is not rational: " + str());
}

Cyc Cyc::conj() const {
    Cyc r;
    r.mod_ = mod_;
    std::unordered_map<i64, Rat> acc;
    for (auto& [k, c] : terms_) acc[mod_pos(-k, mod_)] += c;
    canonicalize(mod_, acc, r.terms_);
    return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    i64 M = lcm64(a.mod_, b.mod_);
    Cyc aa = a.lifted(M), bb = b.lifted(M);
    Cyc r;
    r.mod_ = M;
    // both canonical: merge directly
    auto ia = aa.terms_.begin(), ib = bb.terms_.begin();
    while (ia != aa.terms_.end() || ib != bb.terms_.end()) {
        if (ib == bb.terms_.end() || (ia != aa.terms_.end() && ia->first < ib->first)) {
            r.terms_.push_back(*ia++);
        } else if (ia == aa.terms_.end() || ib->first < ia->first) {
            r.terms_.push_back(*ib++);
        } else {
            Rat c = ia->second + ib->second;
            if (!c.is_zero()) r.terms_.push_back({ia->first, c});
            ++ia; ++ib;
        }
    }
    if (r.terms_.empty()) r.mod_ = 1;
    return r;
}

Cyc operator-(const Cyc& a) {
    Cyc r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.is_zero() || b.is_zero()) return Cyc();
    i64 M = lcm64(a.mod_, b.mod_);
    Cyc aa = a.lifted(M), bb = b.lifted(M);
    Cyc r;
    r.mod_ = M;
    std::unordered_map<i64, Rat> acc;
    acc.reserve(aa.terms_.size() * bb.terms_.size());
    for (auto& [ka, ca] : aa.terms_)
        for (auto& [kb, cb] : bb.terms_) {
            i64 k = ka + kb;
            if (k >= M) k -= M;
            acc[k] += ca * cb;
        }
    Cyc::canonicalize(M, acc, r.terms_);
    if (r.terms_.empty()) r.mod_ = 1;
    return r;
}

Cyc operator*(const Cyc& a, const Rat& s) {
    if (s.is_zero()) return Cyc();
    Cyc r = a;
    for (auto& t : r.terms_) t.second *= s;
    return r;
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.mod_ == b.mod_) return a.terms_ == b.terms_;
    i64 M = lcm64(a.mod_, b.mod_);
    return a.lifted(M).terms_ == b.lifted(M).terms_;
}

std::complex<double> Cyc::approx() const {
    long double re = 0, im = 0;
    const long double tau = 6.28318530717958647692L;
    for (auto& [k, c] : terms_) {
        long double ang = tau * (long double)k / (long double)mod_;
        long double v = (long double)c.num / (long double)c.den;
        re += v * std::cos(ang);
        im += v * std::sin(ang);
    }
    return {double(re), double(im)};
}

std::string Cyc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.num < 0) { os << "-"; a = -a; }
        } else {
            os << (a.num >= 0 ? " + " : " - ");
            if (a.num < 0) a = -a;
        }
        if (k == 0) os << a.str();
        else {
            if (!(a.num == 1 && a.den == 1)) os << a.str() << "*";
            os << "z" << mod_ << "^" << k;
        }
        first = false;
    }
    return os.str();
}

void CycAccum::add(const Cyc& x, const Rat& scale) {
    if (x.is_zero() || scale.is_zero()) return;
    Cyc xx = x.lifted(mod_);
    for (auto& [k, c] : xx.terms_) acc_[k] += c * scale;
}

void CycAccum::add_product(const Cyc& a, const Cyc& b, const Rat& scale) {
    if (a.is_zero() || b.is_zero() || scale.is_zero()) return;
    Cyc aa = a.lifted(mod_), bb = b.lifted(mod_);
    for (auto& [ka, ca] : aa.terms_)
        for (auto& [kb, cb] : bb.terms_) {
            i64 k = ka + kb;
            if (k >= mod_) k -= mod_;
            acc_[k] += ca * cb * scale;
        }
}

Cyc CycAccum::finalize() const {
    Cyc r;
    r.mod_ = mod_;
    auto acc = acc_;
    Cyc::canonicalize(mod_, acc, r.terms_);
    if (r.terms_.empty()) r.mod_ = 1;
    return r;
}

} // namespace modrep
