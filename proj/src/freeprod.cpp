#include "freespec/freeprod.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <optional>

#include "freespec/errors.hpp"
#include "freespec/free_trace.hpp"

namespace freespec {

namespace {

bool is_identity(const Letter& l) { return l.gen == Gen::h ? (l.a == 0 && l.b == 0) : l.power == 0; }

std::string format_coeff(cplx c) {
    char buf[96];
    if (c.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", c.real());
    } else if (c.real() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12gi", c.imag());
    } else {
        std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
    }
    return buf;
}

std::string letter_text(const Letter& l) {
    if (l.gen == Gen::h) return l.tag();
    const std::string g = l.gen == Gen::u ? "u" : "v";
    if (l.power == 1) return g;
    if (l.power == -1) return g + "*";
    if (l.power > 0) return g + "^" + std::to_string(l.power);
    return g + "*^" + std::to_string(-l.power);
}

// Element of one of the three generated subalgebras. For h the keys are
// (a, b) with b in {0, 1}; for u and v the key is (power, 0).
struct PolyLetter {
    Gen gen = Gen::h;
    std::map<std::pair<int, int>, cplx> t;
};

void add_h_term(std::map<std::pair<int, int>, cplx>& t, int a, int b, cplx c) {
    while (b >= 2) {
        // h^a s^b = h^a s^{b-2} - h^{a+2} s^{b-2}
        add_h_term(t, a + 2, b - 2, -c);
        b -= 2;
    }
    auto& slot = t[{a, b}];
    slot += c;
    if (slot == cplx{}) t.erase({a, b});
}

struct PolyTraits {
    using Letter = PolyLetter;
    int algebra(const PolyLetter& l) const { return static_cast<int>(l.gen); }
    PolyLetter mul(const PolyLetter& x, const PolyLetter& y) const {
        PolyLetter out{x.gen, {}};
        for (const auto& [kx, cx] : x.t) {
            for (const auto& [ky, cy] : y.t) {
                if (x.gen == Gen::h) {
                    add_h_term(out.t, kx.first + ky.first, kx.second + ky.second, cx * cy);
                } else {
                    auto& slot = out.t[{kx.first + ky.first, 0}];
                    slot += cx * cy;
                    if (slot == cplx{}) out.t.erase({kx.first + ky.first, 0});
                }
            }
        }
        return out;
    }
    cplx tau(const PolyLetter& l) const {
        cplx acc{};
        if (l.gen == Gen::h) {
            for (const auto& [k, c] : l.t) acc += c * h_moment(k.first, k.second);
        } else if (auto it = l.t.find({0, 0}); it != l.t.end()) {
            acc = it->second;
        }
        return acc;
    }
    std::optional<cplx> scalar(const PolyLetter& l) const {
        if (l.t.empty()) return cplx{};
        if (l.t.size() == 1 && l.t.begin()->first == std::pair{0, 0}) return l.t.begin()->second;
        return std::nullopt;
    }
    PolyLetter centered(const PolyLetter& l) const {
        PolyLetter out = l;
        auto& slot = out.t[{0, 0}];
        slot -= tau(l);
        if (slot == cplx{}) out.t.erase({0, 0});
        return out;
    }
    double scale(const PolyLetter& l) const {
        double s = 0.0;
        for (const auto& [k, c] : l.t) s += std::abs(c);
        return s;
    }
    std::string key(const PolyLetter& l) const {
        std::string k(1, static_cast<char>('0' + static_cast<int>(l.gen)));
        for (const auto& [ab, c] : l.t) {
            char buf[2 * sizeof(int) + sizeof(cplx)];
            std::memcpy(buf, &ab.first, sizeof(int));
            std::memcpy(buf + sizeof(int), &ab.second, sizeof(int));
            std::memcpy(buf + 2 * sizeof(int), &c, sizeof(cplx));
            k.append(buf, sizeof buf);
        }
        k.push_back('|');
        return k;
    }
};

PolyLetter to_poly(const Letter& l) {
    PolyLetter p{l.gen, {}};
    if (l.gen == Gen::h) {
        add_h_term(p.t, l.a, l.b, 1.0);
    } else {
        p.t[{l.power, 0}] = 1.0;
    }
    return p;
}

cplx trace_with(FreeTraceEngine<PolyTraits>& eng, const WordExpr& e) {
    cplx acc{};
    for (const auto& [w, c] : e.terms()) {
        std::vector<PolyLetter> pw;
        pw.reserve(w.size());
        for (const auto& l : w) pw.push_back(to_poly(l));
        acc += c * eng.trace(std::move(pw));
    }
    return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Letter / WordExpr

std::string Letter::tag() const {
    if (gen != Gen::h) return letter_text(*this);
    if (a == 0 && b == 0) return "1";
    if (a == 1 && b == 0) return "h";
    if (a == 0 && b == 1) return "sqrt(1-h^2)";
    if (a == 2 && b == 0) return "h^2";
    if (a == 0 && b == 2) return "(1-h^2)";
    if (a == 1 && b == 1) return "h sqrt(1-h^2)";
    std::string out;
    if (a == 1) out = "h";
    if (a > 1) out = "h^" + std::to_string(a);
    if (b > 0) {
        if (!out.empty()) out += " ";
        out += b == 1 ? "sqrt(1-h^2)" : (b % 2 == 0 ? "(1-h^2)^" + std::to_string(b / 2)
                                                    : "(1-h^2)^{" + std::to_string(b) + "/2}");
    }
    return out;
}

WordExpr WordExpr::scalar(cplx c) { return word({}, c); }

WordExpr WordExpr::word(Word w, cplx c) {
    WordExpr e;
    e.add(std::move(w), c);
    return e;
}

void WordExpr::add(Word w, cplx c) {
    if (c == cplx{}) return;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size();) {
            if (is_identity(w[i])) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                ++i;
            }
        }
        for (std::size_t i = 0; i + 1 < w.size();) {
            if (w[i].gen == w[i + 1].gen) {
                w[i].a += w[i + 1].a;
                w[i].b += w[i + 1].b;
                w[i].power += w[i + 1].power;
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i + 1));
                changed = true;
            } else {
                ++i;
            }
        }
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].gen == Gen::h && w[i].b >= 2) {
            Word lower = w, higher = w;
            lower[i].b -= 2;
            higher[i].b -= 2;
            higher[i].a += 2;
            add(std::move(lower), c);
            add(std::move(higher), -c);
            return;
        }
    }
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second == cplx{}) terms_.erase(it);
    }
}

bool WordExpr::is_zero(double tol) const {
    for (const auto& [w, c] : terms_)
        if (std::abs(c) > tol) return false;
    return true;
}

std::size_t WordExpr::max_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.size());
    return m;
}

WordExpr WordExpr::adjoint() const {
    WordExpr out;
    for (const auto& [w, c] : terms_) {
        Word r(w.rbegin(), w.rend());
        for (auto& l : r) l.power = -l.power;
        out.add(std::move(r), std::conj(c));
    }
    return out;
}

WordExpr WordExpr::operator+(const WordExpr& o) const {
    WordExpr out = *this;
    for (const auto& [w, c] : o.terms_) out.add(w, c);
    return out;
}

WordExpr WordExpr::operator-(const WordExpr& o) const { return *this + o * cplx{-1.0, 0.0}; }

WordExpr WordExpr::operator*(const WordExpr& o) const {
    WordExpr out;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            out.add(std::move(w), c1 * c2);
        }
    }
    return out;
}

WordExpr WordExpr::operator*(cplx c) const {
    WordExpr out;
    for (const auto& [w, x] : terms_) out.add(w, x * c);
    return out;
}

std::string WordExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, coeff] : terms_) {
        cplx c = coeff;
        if (!first) {
            if (c.imag() == 0.0 && c.real() < 0.0) {
                out += " - ";
                c = -c;
            } else {
                out += " + ";
            }
        }
        first = false;
        std::string body;
        for (const auto& l : w) {
            if (!body.empty()) body += " ";
            body += letter_text(l);
        }
        if (body.empty()) {
            out += format_coeff(c);
        } else if (c == cplx{1.0, 0.0}) {
            out += body;
        } else {
            out += format_coeff(c) + " " + body;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SymbolicMat2

SymbolicMat2 SymbolicMat2::identity() {
    SymbolicMat2 m;
    m(0, 0) = WordExpr::scalar(1.0);
    m(1, 1) = WordExpr::scalar(1.0);
    return m;
}

SymbolicMat2 SymbolicMat2::adjoint() const {
    SymbolicMat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = (*this)(j, i).adjoint();
    return m;
}

SymbolicMat2 SymbolicMat2::operator+(const SymbolicMat2& o) const {
    SymbolicMat2 m;
    for (std::size_t k = 0; k < 4; ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

SymbolicMat2 SymbolicMat2::operator-(const SymbolicMat2& o) const {
    SymbolicMat2 m;
    for (std::size_t k = 0; k < 4; ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

SymbolicMat2 SymbolicMat2::operator*(const SymbolicMat2& o) const {
    SymbolicMat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
    return m;
}

SymbolicMat2 SymbolicMat2::operator*(cplx c) const {
    SymbolicMat2 m;
    for (std::size_t k = 0; k < 4; ++k) m.e_[k] = e_[k] * c;
    return m;
}

bool SymbolicMat2::is_zero(double tol) const {
    for (const auto& e : e_)
        if (!e.is_zero(tol)) return false;
    return true;
}

std::string SymbolicMat2::to_string() const {
    std::string out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out += "b" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + (*this)(i, j).to_string() + "\n";
    return out;
}

// ---------------------------------------------------------------------------

SymbolicMat2 decompose(const Mat2& b) {
    const cplx alpha = b(0, 0), beta = b(0, 1), gamma = b(1, 0), sigma = b(1, 1);
    const Letter h = Letter::func(1, 0), s = Letter::func(0, 1), h2 = Letter::func(2, 0);
    const Letter u = Letter::u(1), us = Letter::u(-1), v = Letter::v(1), vs = Letter::v(-1);
    using W = WordExpr;
    SymbolicMat2 m;
    m(0, 0) = W::scalar(sigma) + W::word({h2}, alpha - sigma) + W::word({s, v, h}, gamma) +
              W::word({h, vs, s}, beta);
    m(0, 1) = W::word({h, s, u}, alpha - sigma) + W::word({s, v, s, u}, gamma) - W::word({h, vs, h, u}, beta);
    m(1, 0) = W::word({us, h, s}, alpha - sigma) - W::word({us, h, v, h}, gamma) +
              W::word({us, s, vs, s}, beta);
    m(1, 1) = W::scalar(alpha) + W::word({us, h2, u}, sigma - alpha) - W::word({us, h, v, s, u}, gamma) -
              W::word({us, s, vs, h, u}, beta);
    return m;
}

std::pair<SymbolicMat2, SymbolicMat2> v1_conjugations() {
    const Letter h = Letter::func(1, 0), s = Letter::func(0, 1), h2 = Letter::func(2, 0),
                 one_minus = Letter::func(0, 2);
    const Letter u = Letter::u(1), us = Letter::u(-1), vs = Letter::v(-1);
    using W = WordExpr;
    SymbolicMat2 e11, e12;
    e11(0, 0) = W::word({h2});
    e11(0, 1) = W::word({s, h, u});
    e11(1, 0) = W::word({us, h, s});
    e11(1, 1) = W::word({us, one_minus, u});
    e12(0, 0) = W::word({h, vs, s});
    e12(0, 1) = W::word({h, vs, h, u}, -1.0);
    e12(1, 0) = W::word({us, s, vs, s});
    e12(1, 1) = W::word({us, s, vs, h, u}, -1.0);
    return {e11, e12};
}

double h_moment(int a, int b) {
    if (a < 0 || b < 0) throw PreconditionError("h moments need nonnegative exponents");
    // (2/pi) int_0^1 h^a (1-h^2)^{(b-1)/2} dh
    return std::beta(0.5 * (a + 1), 0.5 * (b + 1)) / std::numbers::pi;
}

cplx word_trace(const WordExpr& e, std::size_t max_length) {
    FreeTraceEngine<PolyTraits> eng(max_length);
    return trace_with(eng, e);
}

cplx symbolic_trace(const SymbolicMat2& m, std::size_t max_length) {
    FreeTraceEngine<PolyTraits> eng(max_length);
    return 0.5 * (trace_with(eng, m(0, 0)) + trace_with(eng, m(1, 1)));
}

SymbolicMat2 power(const SymbolicMat2& m, int k) {
    if (k < 0) throw PreconditionError("negative power of a symbolic matrix");
    SymbolicMat2 out = SymbolicMat2::identity();
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}

GeneratorSample sample_generators(Eigen::Index n, Rng& rng) {
    if (n < 2) throw PreconditionError("matrix model needs N >= 2");
    GeneratorSample g;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    g.h.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) g.h(i) = std::abs(std::cos(std::numbers::pi * unif(rng)));
    g.u = haar_unitary(n, rng);
    g.v = haar_unitary(n, rng);
    return g;
}

Eigen::MatrixXcd evaluate(const WordExpr& e, const GeneratorSample& g) {
    const Eigen::Index n = g.h.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [w, c] : e.terms()) {
        // empty until the first letter
        Eigen::MatrixXcd cur;
        bool started = false;
        for (const auto& l : w) {
            if (l.gen == Gen::h) {
                Eigen::VectorXd f(n);
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double x = g.h(i);
                    f(i) = std::pow(x, l.a) * std::pow(std::max(0.0, 1.0 - x * x), 0.5 * l.b);
                }
                if (started) {
                    cur = cur * f.asDiagonal();
                } else {
                    cur = f.cast<cplx>().asDiagonal();
                    started = true;
                }
                continue;
            }
            const Eigen::MatrixXcd& base = l.gen == Gen::u ? g.u : g.v;
            for (int p = 0; p < std::abs(l.power); ++p) {
                if (!started) {
                    cur = l.power > 0 ? Eigen::MatrixXcd(base) : Eigen::MatrixXcd(base.adjoint());
                    started = true;
                } else if (l.power > 0) {
                    cur = cur * base;
                } else {
                    cur = cur * base.adjoint();
                }
            }
        }
        if (!started) {
            out.diagonal().array() += c;
            continue;
        }
        out += c * cur;
    }
    return out;
}

Eigen::MatrixXcd evaluate(const SymbolicMat2& m, const GeneratorSample& g) {
    const Eigen::Index n = g.h.size();
    Eigen::MatrixXcd out(2 * n, 2 * n);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block(i * n, j * n, n, n) = evaluate(m(i, j), g);
    return out;
}

Eigen::MatrixXcd evaluate_matrix_model(const SymbolicMat2& m, Eigen::Index n, std::uint64_t seed) {
    Rng rng = make_rng(seed, 0);
    return evaluate(m, sample_generators(n, rng));
}

}  // namespace freespec
