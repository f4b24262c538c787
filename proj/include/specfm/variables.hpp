#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace specfm {

// The polynomial variables. `w` is an internal auxiliary used by the ideal
// quotient construction; the text format only exposes x, y, z, t.
enum class Var : std::uint8_t { x = 0, y = 1, z = 2, t = 3, w = 4 };

inline constexpr int kVarCount = 5;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

class VarSet {
public:
    VarSet() : mask_(0) {}
    VarSet(std::initializer_list<Var> vars) : mask_(0) {
        for (Var v : vars) add(v);
    }

    void add(Var v) { mask_ |= bit(v); }
    bool contains(Var v) const { return (mask_ & bit(v)) != 0; }
    bool subset_of(const VarSet& o) const { return (mask_ & ~o.mask_) == 0; }
    VarSet united(const VarSet& o) const {
        VarSet r;
        r.mask_ = mask_ | o.mask_;
        return r;
    }
    VarSet without(Var v) const {
        VarSet r;
        r.mask_ = mask_ & ~bit(v);
        return r;
    }
    bool empty() const { return mask_ == 0; }
    int size() const;
    std::vector<Var> list() const;  // ascending by enum value

    bool operator==(const VarSet& o) const { return mask_ == o.mask_; }
    bool operator!=(const VarSet& o) const { return mask_ != o.mask_; }

private:
    static std::uint8_t bit(Var v) { return std::uint8_t(1u << int(v)); }
    std::uint8_t mask_;
};

// Exponent vector indexed by Var. Exponents of variables outside the owning
// polynomial's VarSet are zero.
struct Monomial {
    std::array<std::uint32_t, kVarCount> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(Var v, std::uint32_t k = 1) {
        Monomial m;
        m.e[int(v)] = k;
        return m;
    }

    std::uint32_t deg(Var v) const { return e[int(v)]; }
    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return total_degree() == 0; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < kVarCount; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    // Requires this->divides(o) checked by the caller where it matters.
    Monomial divide_into(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i) r.e[i] = o.e[i] - e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < kVarCount; ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

}  // namespace specfm
