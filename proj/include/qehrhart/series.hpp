#pragma once

#include <utility>
#include <vector>

#include "qehrhart/qrat.hpp"

namespace qe {

/// Rational function of t over Q(q) whose denominator is a product of
/// factors (1 - q^j t), one per entry of a sorted exponent multiset.
/// Canonical form: no denominator factor divides the numerator.
class SeriesTQ {
  public:
    SeriesTQ() = default;
    /// numerator[k] is the t^k coefficient.
    SeriesTQ(std::vector<QRat> numerator, std::vector<int> denominator_exponents);

    static SeriesTQ zero() { return SeriesTQ(); }
    static SeriesTQ one();

    const std::vector<QRat>& numerator() const { return num_; }
    const std::vector<int>& denominator_exponents() const { return exps_; }
    bool is_zero() const { return num_.empty(); }

    bool operator==(const SeriesTQ& other) const { return num_ == other.num_ && exps_ == other.exps_; }

    SeriesTQ operator+(const SeriesTQ& other) const;
    SeriesTQ operator-(const SeriesTQ& other) const;
    SeriesTQ operator*(const QRat& scalar) const;

    /// Append a factor (1 - q^j t) to the denominator (then recanonicalize).
    SeriesTQ with_extra_pole(int j) const;

    /// Substitute t -> q^a t (a >= 0).
    SeriesTQ subst_t_scaled(int a) const;
    /// Substitute t -> q^m t and q -> 1/q; requires every denominator
    /// exponent to be at most m.
    SeriesTQ subst_reversal(int m) const;

    /// Taylor coefficients of t^0..t^order.
    std::vector<QRat> taylor(int order) const;

    /// True iff no denominator exponent repeats.
    bool denominator_squarefree() const;

  private:
    void canonicalize();
    static std::vector<QRat> multiply_factor(std::vector<QRat> num, int j);

    std::vector<QRat> num_;
    std::vector<int> exps_;
};

/// Coefficients c_j with series = sum_j c_j / (1 - q^{j} t), one per
/// denominator exponent; requires a squarefree denominator and numerator
/// degree below the number of factors.
std::vector<std::pair<int, QRat>> partial_fractions(const SeriesTQ& series);

}  // namespace qe
