#include "qehrhart/series.hpp"

#include <algorithm>

#include "qehrhart/errors.hpp"

namespace qe {

SeriesTQ::SeriesTQ(std::vector<QRat> numerator, std::vector<int> denominator_exponents)
    : num_(std::move(numerator)), exps_(std::move(denominator_exponents)) {
    for (int j : exps_)
        if (j < 0) throw PreconditionError("negative denominator exponent");
    std::sort(exps_.begin(), exps_.end());
    canonicalize();
}

SeriesTQ SeriesTQ::one() { return SeriesTQ({QRat(1)}, {}); }

std::vector<QRat> SeriesTQ::multiply_factor(std::vector<QRat> num, int j) {
    // Multiply a polynomial in t by (1 - q^j t).
    std::vector<QRat> out(num.size() + 1);
    QRat qj = QRat::q_power(j);
    for (size_t k = 0; k < num.size(); ++k) {
        out[k] += num[k];
        out[k + 1] -= num[k] * qj;
    }
    return out;
}

void SeriesTQ::canonicalize() {
    while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
    if (num_.empty()) {
        exps_.clear();
        return;
    }
    // Strip denominator factors dividing the numerator. A factor (1 - q^j t)
    // divides N(t) iff N(q^{-j}) = 0; synthetic division removes it.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < exps_.size(); ++i) {
            int j = exps_[i];
            QRat at_pole;
            QRat point = QRat::q_power(-j);
            for (auto it = num_.rbegin(); it != num_.rend(); ++it) at_pole = at_pole * point + *it;
            if (!at_pole.is_zero()) continue;
            // N = (1 - q^j t) M with m_k = n_k + q^j m_{k-1}.
            QRat qj = QRat::q_power(j);
            std::vector<QRat> quot(num_.size() - 1);
            QRat carry;
            for (size_t k = 0; k + 1 < num_.size(); ++k) {
                carry = num_[k] + qj * carry;
                quot[k] = carry;
            }
            num_ = std::move(quot);
            exps_.erase(exps_.begin() + static_cast<long>(i));
            changed = !num_.empty();
            break;
        }
        if (num_.empty()) {
            exps_.clear();
            return;
        }
    }
}

SeriesTQ SeriesTQ::operator+(const SeriesTQ& other) const {
    // Common denominator: per-exponent maximum multiplicity.
    std::vector<int> common;
    {
        std::vector<int> a = exps_, b = other.exps_;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i] < b[j]))
                common.push_back(a[i++]);
            else if (i == a.size() || b[j] < a[i])
                common.push_back(b[j++]);
            else {
                common.push_back(a[i]);
                ++i;
                ++j;
            }
        }
    }
    auto lift = [&common](const SeriesTQ& s) {
        std::vector<QRat> num = s.num_;
        std::vector<int> missing;
        std::set_difference(common.begin(), common.end(), s.exps_.begin(), s.exps_.end(),
                            std::back_inserter(missing));
        for (int j : missing) num = multiply_factor(std::move(num), j);
        return num;
    };
    std::vector<QRat> na = lift(*this);
    std::vector<QRat> nb = lift(other);
    std::vector<QRat> sum(std::max(na.size(), nb.size()));
    for (size_t k = 0; k < sum.size(); ++k) {
        if (k < na.size()) sum[k] += na[k];
        if (k < nb.size()) sum[k] += nb[k];
    }
    return SeriesTQ(std::move(sum), std::move(common));
}

SeriesTQ SeriesTQ::operator-(const SeriesTQ& other) const { return *this + other * QRat(-1); }

SeriesTQ SeriesTQ::operator*(const QRat& scalar) const {
    std::vector<QRat> num(num_.size());
    for (size_t k = 0; k < num_.size(); ++k) num[k] = num_[k] * scalar;
    return SeriesTQ(std::move(num), exps_);
}

SeriesTQ SeriesTQ::with_extra_pole(int j) const {
    std::vector<int> exps = exps_;
    exps.push_back(j);
    return SeriesTQ(num_, std::move(exps));
}

SeriesTQ SeriesTQ::subst_t_scaled(int a) const {
    if (a < 0) throw PreconditionError("negative t-scaling exponent");
    std::vector<QRat> num(num_.size());
    for (size_t k = 0; k < num_.size(); ++k) num[k] = num_[k] * QRat::q_power(a * static_cast<int>(k));
    std::vector<int> exps(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] + a;
    return SeriesTQ(std::move(num), std::move(exps));
}

SeriesTQ SeriesTQ::subst_reversal(int m) const {
    std::vector<int> exps(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > m) throw PreconditionError("denominator exponent exceeds reversal degree");
        exps[i] = m - exps_[i];
    }
    std::vector<QRat> num(num_.size());
    for (size_t k = 0; k < num_.size(); ++k)
        num[k] = num_[k].subst_inverse_q() * QRat::q_power(m * static_cast<int>(k));
    return SeriesTQ(std::move(num), std::move(exps));
}

std::vector<QRat> SeriesTQ::taylor(int order) const {
    // Multiply the numerator by the expansions 1/(1 - q^j t) = sum q^{jn} t^n.
    std::vector<QRat> acc(static_cast<size_t>(order) + 1);
    for (size_t k = 0; k < num_.size() && k <= static_cast<size_t>(order); ++k) acc[k] = num_[k];
    for (int j : exps_) {
        std::vector<QRat> next(acc.size());
        QRat qj = QRat::q_power(j);
        for (size_t n = 0; n < acc.size(); ++n) {
            QRat geom(1);
            for (size_t i = n;; --i) {
                next[n] += acc[i] * geom;
                if (i == 0) break;
                geom = geom * qj;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

bool SeriesTQ::denominator_squarefree() const {
    return std::adjacent_find(exps_.begin(), exps_.end()) == exps_.end();
}

std::vector<std::pair<int, QRat>> partial_fractions(const SeriesTQ& series) {
    if (!series.denominator_squarefree()) throw PreconditionError("denominator is not squarefree");
    const auto& exps = series.denominator_exponents();
    if (series.numerator().size() > exps.size())
        throw PreconditionError("numerator degree too large for partial fractions");
    std::vector<std::pair<int, QRat>> out;
    out.reserve(exps.size());
    for (int j : exps) {
        // Residue at t = q^{-j}: N(q^{-j}) / prod_{i != j} (1 - q^{i-j}).
        QRat value;
        QRat point = QRat::q_power(-j);
        for (auto it = series.numerator().rbegin(); it != series.numerator().rend(); ++it)
            value = value * point + *it;
        QRat denom(1);
        for (int i : exps) {
            if (i == j) continue;
            denom = denom * (QRat(1) - QRat::q_power(i - j));
        }
        out.emplace_back(j, value / denom);
    }
    return out;
}

}  // namespace qe
