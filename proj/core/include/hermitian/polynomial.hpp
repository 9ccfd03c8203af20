#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hermitian {

/* x_1..x_nx, then y_1..y_ny, then optionally t.  t has weight 2 in the
 * truncation degree so that t^{|pi|/2} s_pi stays homogeneous. */
struct VarLayout {
    int nx = 0;
    int ny = 0;
    bool t = false;

    int nvars() const { return nx + ny + (t ? 1 : 0); }
    int t_index() const { return nx + ny; }
    friend bool operator==(const VarLayout &, const VarLayout &) = default;
};

using Monomial = std::vector<std::uint16_t>;

/* Sparse integer polynomial, truncated at a weighted total degree. */
class Poly {
  public:
    Poly(VarLayout layout, std::optional<int> cap);

    static Poly constant(VarLayout layout, std::optional<int> cap, const mpz_class &c);
    static Poly variable(VarLayout layout, std::optional<int> cap, int var);

    const VarLayout &layout() const { return layout_; }
    std::optional<int> cap() const { return cap_; }
    const std::map<Monomial, mpz_class> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int degree(const Monomial &m) const;
    void add_term(const Monomial &m, const mpz_class &c);

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const mpz_class &c);
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);

    /* multiply by var^e */
    Poly shifted(int var, int e) const;
    /* substitute x_i -> -x_i for vars in [first, first+count) */
    Poly negate_vars(int first, int count) const;
    /* same polynomial, different cap (only lowering is meaningful) */
    Poly recapped(std::optional<int> cap) const;

    std::string to_string() const;

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.layout_ == b.layout_ && a.terms_ == b.terms_;
    }

  private:
    VarLayout layout_;
    std::optional<int> cap_;
    std::map<Monomial, mpz_class> terms_;
};

/* Schur polynomial in count consecutive variables starting at first */
Poly schur(const std::vector<int> &shape, VarLayout layout, std::optional<int> cap, int first,
           int count);

} // namespace hermitian
