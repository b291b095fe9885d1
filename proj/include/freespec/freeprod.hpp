#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "freespec/linalg.hpp"
#include "freespec/mat2.hpp"

namespace freespec {

enum class Gen { h, u, v };

/// One letter of a word in the *-free generators h, u, v. For h the letter
/// is the function h^a (1-h^2)^{b/2}; for u and v it is the power `power`.
struct Letter {
    Gen gen = Gen::h;
    int a = 0;
    int b = 0;
    int power = 0;

    static Letter func(int a, int b) { return {Gen::h, a, b, 0}; }
    static Letter u(int p = 1) { return {Gen::u, 0, 0, p}; }
    static Letter v(int p = 1) { return {Gen::v, 0, 0, p}; }

    /// Name of the function of h: "h", "sqrt(1-h^2)", "h^2", "(1-h^2)",
    /// "h sqrt(1-h^2)" or the general "h^a (1-h^2)^{b/2}".
    std::string tag() const;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Finite linear combination of words, kept in normal form: adjacent
/// functions of h fused, (1-h^2) powers reduced so b is 0 or 1, powers of
/// u and v merged, identity letters dropped, like words combined.
class WordExpr {
public:
    WordExpr() = default;
    static WordExpr scalar(cplx c);
    static WordExpr word(Word w, cplx c = 1.0);
    static WordExpr letter(Letter l, cplx c = 1.0) { return word({l}, c); }

    const std::map<Word, cplx>& terms() const { return terms_; }
    bool is_zero(double tol = 0.0) const;
    /// Largest word length over the terms.
    std::size_t max_length() const;

    WordExpr adjoint() const;
    WordExpr operator+(const WordExpr& o) const;
    WordExpr operator-(const WordExpr& o) const;
    WordExpr operator*(const WordExpr& o) const;
    WordExpr operator*(cplx c) const;
    friend WordExpr operator*(cplx c, const WordExpr& e) { return e * c; }

    std::string to_string() const;

private:
    void add(Word w, cplx c);
    std::map<Word, cplx> terms_;
};

/// 2x2 matrix over WordExpr, indexed from 0.
class SymbolicMat2 {
public:
    SymbolicMat2() = default;
    static SymbolicMat2 identity();

    WordExpr& operator()(int i, int j) { return e_[static_cast<std::size_t>(2 * i + j)]; }
    const WordExpr& operator()(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }

    SymbolicMat2 adjoint() const;
    SymbolicMat2 operator+(const SymbolicMat2& o) const;
    SymbolicMat2 operator-(const SymbolicMat2& o) const;
    SymbolicMat2 operator*(const SymbolicMat2& o) const;
    SymbolicMat2 operator*(cplx c) const;

    bool is_zero(double tol = 0.0) const;
    std::string to_string() const;

private:
    std::array<WordExpr, 4> e_;
};

/// B = [[alpha, beta], [gamma, sigma]] in the second copy written as a 2x2
/// matrix over h, u, v relative to the matrix units of the first copy.
SymbolicMat2 decompose(const Mat2& b);

/// The conjugates of E11 and E12 of the first copy by the symmetry V1.
std::pair<SymbolicMat2, SymbolicMat2> v1_conjugations();

/// Moments of h: tau(h^a (1-h^2)^{b/2}) for h = |H|, H arcsine on [-1, 1].
double h_moment(int a, int b);

/// tau of a word combination under the free trace of (h, u, v).
cplx word_trace(const WordExpr& e, std::size_t max_length = 16);

/// 1/2 (tau(M_00) + tau(M_11)).
cplx symbolic_trace(const SymbolicMat2& m, std::size_t max_length = 16);

/// Integer power of a symbolic matrix.
SymbolicMat2 power(const SymbolicMat2& m, int k);

/// One draw of the generators at size N: h a diagonal of |x| with x
/// arcsine on [-1, 1], u and v independent Haar unitaries.
struct GeneratorSample {
    Eigen::VectorXd h;
    Eigen::MatrixXcd u;
    Eigen::MatrixXcd v;
};

GeneratorSample sample_generators(Eigen::Index n, Rng& rng);

Eigen::MatrixXcd evaluate(const WordExpr& e, const GeneratorSample& g);

/// Block matrix [[M_00, M_01], [M_10, M_11]] of size 2N.
Eigen::MatrixXcd evaluate(const SymbolicMat2& m, const GeneratorSample& g);

Eigen::MatrixXcd evaluate_matrix_model(const SymbolicMat2& m, Eigen::Index n, std::uint64_t seed);

}  // namespace freespec
