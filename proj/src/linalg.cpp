#include "polyspace/linalg.hpp"

#include <algorithm>
#include <utility>

#include "polyspace/errors.hpp"

namespace polyspace {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector size mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

RankResult matrix_rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RankResult result;

    // clear denominators row by row
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }

    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) std::swap(a[piv], a[rank]);
        const Integer& p = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = p * a[i][j] - a[i][c] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = p;
        result.pivots.push_back(c);
        ++rank;
    }
    result.rank = rank;

    std::vector<bool> is_pivot(cols, false);
    for (auto c : result.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = rank; k-- > 0;) {
            const std::size_t pc = result.pivots[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (sgn(x[j]) != 0 && a[k][j] != 0) acc += Rational(a[k][j]) * x[j];
            x[pc] = -acc / Rational(a[k][pc]);
        }
        result.kernel.push_back(std::move(x));
    }
    return result;
}

void IncrementalSpan::reduce(std::vector<Rational>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational f = v[pivots_[k]];
        if (sgn(f) == 0) continue;
        const auto& row = rows_[k];
        for (std::size_t j = 0; j < width_; ++j)
            if (sgn(row[j]) != 0) v[j] -= f * row[j];
    }
}

bool IncrementalSpan::contains(std::vector<Rational> v) const {
    if (v.size() != width_) throw Error(Errc::DimensionMismatch, "span vector width mismatch");
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool IncrementalSpan::add(std::vector<Rational> v) {
    if (v.size() != width_) throw Error(Errc::DimensionMismatch, "span vector width mismatch");
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it == v.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    for (auto& row : rows_) {
        const Rational f = row[p];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < width_; ++j)
            if (sgn(v[j]) != 0) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

}  // namespace polyspace
