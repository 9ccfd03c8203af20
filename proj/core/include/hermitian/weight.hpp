#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermitian/error.hpp"

namespace hermitian {

/* Exact element of (1/2)Z, stored doubled. */
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t v) : twice_(2 * v) {}
    static constexpr HalfInt from_twice(std::int64_t t)
    {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    std::int64_t to_int() const;
    std::string to_string() const;

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt &operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt &operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_twice(k * a.twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  private:
    std::int64_t twice_ = 0;
};

inline constexpr HalfInt half(std::int64_t numerator) { return HalfInt::from_twice(numerator); }

/* Weight in epsilon coordinates.  Type I weights carry the position of the
 * semicolon that separates the two gl blocks. */
struct Weight {
    std::vector<HalfInt> coords;
    std::optional<int> split;

    int size() const { return static_cast<int>(coords.size()); }
    HalfInt operator[](int i) const { return coords[i]; }
    std::string to_string() const;

    friend bool operator==(const Weight &, const Weight &) = default;
};

Weight make_weight(const std::vector<std::int64_t> &v, std::optional<int> split = {});
Weight operator+(const Weight &a, const Weight &b);
Weight operator-(const Weight &a, const Weight &b);
/* reverse and negate the whole tuple; a split at s moves to size-s */
Weight dual(const Weight &w);
bool all_integral(const Weight &w);

} // namespace hermitian
