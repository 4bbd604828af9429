#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hermrank {

/// Exponent vector of a monomial in a fixed number of variables.
/// Ordering throughout the library is graded lexicographic: higher total
/// degree first; on equal degree, the monomial whose earlier variable carries
/// the larger exponent is the larger one.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0u) {}
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    /// The monomial z_k (0-based k).
    static Monomial unit(std::size_t nvars, std::size_t k) {
        Monomial m(nvars);
        if (k >= nvars) throw shape_mismatch("variable index out of range");
        m.e_[k] = 1;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

    Monomial operator*(const Monomial& o) const {
        check_vars(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        check_vars(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Quotient o / this; caller must ensure divisibility.
    Monomial quotient_of(const Monomial& o) const {
        check_vars(o);
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] > o.e_[i]) throw shape_mismatch("monomial quotient does not exist");
            r.e_[i] -= e_[i];
        }
        return r;
    }

    /// Raise a single variable's exponent.
    Monomial times_var(std::size_t k, unsigned by = 1) const {
        Monomial r(*this);
        if (k >= e_.size()) throw shape_mismatch("variable index out of range");
        r.e_[k] += by;
        return r;
    }

    /// Same exponents with `extra` fresh trailing variables at exponent 0.
    Monomial widened(std::size_t extra) const {
        Monomial r(*this);
        r.e_.insert(r.e_.end(), extra, 0u);
        return r;
    }

    /// Drops the last variable (used when substituting it by 1).
    Monomial without_last() const {
        if (e_.empty()) throw shape_mismatch("no variable to drop");
        Monomial r(*this);
        r.e_.pop_back();
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Graded-lex comparison: negative, zero, positive like strcmp.
    static int grlex_compare(const Monomial& a, const Monomial& b) {
        a.check_vars(b);
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
        }
        return 0;
    }

    struct GrlexLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return grlex_compare(a, b) < 0;
        }
    };

    /// e.g. "z1^2*z3" (1-based variable names, empty product -> "1").
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += "z" + std::to_string(i + 1);
            if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
        }
        return out.empty() ? "1" : out;
    }

private:
    void check_vars(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw variable_count_mismatch();
    }

    std::vector<unsigned> e_;
};

}  // namespace hermrank
