#pragma once

/**
 * Monomials and monomial ideals over a fixed, declared set of variables.
 *
 * Two variable spaces occur: the coarse space x_1..x_d and the grid space
 * x_11..x_nd (row-major).  Monomials are exponent vectors; ideals keep a
 * minimal generating set in graded lexicographic order.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace tropres {

class VariableSpace
{
    public:
        enum class Kind { coarse, grid };

        VariableSpace() = default;

        static VariableSpace coarse(std::size_t d) { return VariableSpace(Kind::coarse, 1, d); }
        static VariableSpace grid(std::size_t n, std::size_t d) { return VariableSpace(Kind::grid, n, d); }

        Kind kind() const { return kind_; }
        std::size_t rows() const { return n_; }
        std::size_t cols() const { return d_; }
        std::size_t size() const { return kind_ == Kind::coarse ? d_ : n_ * d_; }

        /** "x3" in the coarse space; "x12" (or "x1_2" beyond 9 rows/columns) in the grid. */
        std::string name(std::size_t v) const
        {
            if (kind_ == Kind::coarse)
                return "x" + std::to_string(v + 1);
            std::size_t i = v / d_ + 1, j = v % d_ + 1;
            if (n_ <= 9 && d_ <= 9)
                return "x" + std::to_string(i) + std::to_string(j);
            return "x" + std::to_string(i) + "_" + std::to_string(j);
        }

        bool operator==(const VariableSpace&) const = default;

    private:
        VariableSpace(Kind kind, std::size_t n, std::size_t d) : kind_(kind), n_(n), d_(d) {}

        Kind kind_ = Kind::coarse;
        std::size_t n_ = 1;
        std::size_t d_ = 0;
};

class Monomial
{
    public:
        Monomial() = default;
        explicit Monomial(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}
        Monomial(std::initializer_list<unsigned> exponents) : e_(exponents) {}

        static Monomial one(std::size_t variables) { return Monomial(std::vector<unsigned>(variables, 0)); }

        static Monomial variable_power(std::size_t variables, std::size_t v, unsigned power)
        {
            Monomial m = one(variables);
            m.e_.at(v) = power;
            return m;
        }

        std::size_t size() const { return e_.size(); }
        unsigned operator[](std::size_t v) const { return e_[v]; }
        unsigned& operator[](std::size_t v) { return e_[v]; }
        const std::vector<unsigned>& exponents() const { return e_; }

        unsigned degree() const
        {
            unsigned s = 0;
            for (auto x : e_)
                s += x;
            return s;
        }

        bool is_one() const { return degree() == 0; }

        /** Support size (number of variables with positive exponent). */
        std::size_t support_size() const
        {
            return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](unsigned x) { return x > 0; }));
        }

        bool divides(const Monomial& other) const
        {
            require_same_size(other);
            for (std::size_t v = 0; v < e_.size(); ++v)
                if (e_[v] > other.e_[v])
                    return false;
            return true;
        }

        /** other / this; requires divisibility. */
        Monomial quotient_of(const Monomial& other) const
        {
            if (!divides(other))
                throw PreconditionError("monomial quotient of a non-multiple");
            Monomial q = other;
            for (std::size_t v = 0; v < e_.size(); ++v)
                q.e_[v] -= e_[v];
            return q;
        }

        std::string to_string(const VariableSpace& space) const
        {
            if (space.size() != e_.size())
                throw DimensionError("monomial does not live in the given variable space");
            std::string s;
            for (std::size_t v = 0; v < e_.size(); ++v)
            {
                if (e_[v] == 0)
                    continue;
                if (!s.empty())
                    s += "*";
                s += space.name(v);
                if (e_[v] > 1)
                    s += "^" + std::to_string(e_[v]);
            }
            return s.empty() ? "1" : s;
        }

        void require_same_size(const Monomial& other) const
        {
            if (other.e_.size() != e_.size())
                throw DimensionError("monomials over different variable spaces");
        }

        auto operator<=>(const Monomial&) const = default;

    private:
        std::vector<unsigned> e_;
};

/** Inverse of Monomial::to_string, e.g. "x1^2*x3" or "x12*x23". */
inline Monomial parse_monomial(const VariableSpace& space, const std::string& text)
{
    Monomial m = Monomial::one(space.size());
    if (text == "1")
        return m;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        auto end = text.find('*', pos);
        if (end == std::string::npos)
            end = text.size();
        std::string factor = text.substr(pos, end - pos);
        unsigned power = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos)
        {
            try
            {
                power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
            }
            catch (const std::exception&)
            {
                throw InputError("malformed exponent in '" + factor + "'");
            }
            factor = factor.substr(0, caret);
        }
        bool found = false;
        for (std::size_t v = 0; v < space.size() && !found; ++v)
            if (space.name(v) == factor)
            {
                m[v] += power;
                found = true;
            }
        if (!found)
            throw InputError("unknown variable '" + factor + "'");
        pos = end + 1;
    }
    return m;
}

inline Monomial lcm(const Monomial& a, const Monomial& b)
{
    a.require_same_size(b);
    Monomial m = a;
    for (std::size_t v = 0; v < a.size(); ++v)
        m[v] = std::max(a[v], b[v]);
    return m;
}

inline Monomial gcd(const Monomial& a, const Monomial& b)
{
    a.require_same_size(b);
    Monomial m = a;
    for (std::size_t v = 0; v < a.size(); ++v)
        m[v] = std::min(a[v], b[v]);
    return m;
}

/** Degree first, then lexicographically larger exponent vectors first. */
inline bool graded_lex_less(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.exponents() > b.exponents();
}

class MonomialIdeal;
inline MonomialIdeal minimalize(const VariableSpace& space, std::vector<Monomial> gens);

/** A monomial ideal by its minimal generators.  No generators: the zero ideal. */
class MonomialIdeal
{
    public:
        MonomialIdeal() = default;

        const VariableSpace& space() const { return space_; }
        const std::vector<Monomial>& generators() const { return gens_; }
        std::size_t size() const { return gens_.size(); }
        bool is_zero() const { return gens_.empty(); }
        bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

        bool contains(const Monomial& m) const
        {
            for (const auto& g : gens_)
                if (g.divides(m))
                    return true;
            return false;
        }

        /** Contains a power of every variable. */
        bool is_artinian() const
        {
            for (std::size_t v = 0; v < space_.size(); ++v)
            {
                bool found = false;
                for (const auto& g : gens_)
                    found = found || (g.support_size() <= 1 && (g[v] > 0 || g.is_one()));
                if (!found)
                    return false;
            }
            return true;
        }

        bool is_squarefree() const
        {
            for (const auto& g : gens_)
                for (auto x : g.exponents())
                    if (x > 1)
                        return false;
            return true;
        }

        /** Generators rendered and joined, e.g. "<x1^2, x1*x2>". */
        std::string to_string() const
        {
            std::string s = "<";
            for (std::size_t x = 0; x < gens_.size(); ++x)
                s += (x ? ", " : "") + gens_[x].to_string(space_);
            return s + ">";
        }

        std::vector<std::string> generator_strings() const
        {
            std::vector<std::string> out;
            for (const auto& g : gens_)
                out.push_back(g.to_string(space_));
            return out;
        }

        bool operator==(const MonomialIdeal&) const = default;

        friend MonomialIdeal minimalize(const VariableSpace& space, std::vector<Monomial> gens);

    private:
        VariableSpace space_;
        std::vector<Monomial> gens_;
};

/** Drop every generator divisible by another (and duplicates). */
inline MonomialIdeal minimalize(const VariableSpace& space, std::vector<Monomial> gens)
{
    for (const auto& g : gens)
        if (g.size() != space.size())
            throw DimensionError("generator does not live in the declared variable space");
    std::sort(gens.begin(), gens.end(), graded_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal ideal;
    ideal.space_ = space;
    for (auto& g : gens)
    {
        bool redundant = false;
        for (const auto& kept : ideal.gens_)
            if (kept.divides(g))
            {
                redundant = true;
                break;
            }
        if (!redundant)
            ideal.gens_.push_back(std::move(g));
    }
    return ideal;
}

inline MonomialIdeal minimalize(const MonomialIdeal& ideal) { return minimalize(ideal.space(), ideal.generators()); }

inline void require_same_space(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (!(a.space() == b.space()))
        throw DimensionError("ideals over different variable spaces");
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_space(a, b);
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return minimalize(a.space(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_space(a, b);
    std::vector<Monomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators())
            gens.push_back(lcm(f, g));
    return minimalize(a.space(), std::move(gens));
}

inline MonomialIdeal unit_ideal(const VariableSpace& space) { return minimalize(space, {Monomial::one(space.size())}); }

/** The power m^k of the maximal ideal of the space. */
inline MonomialIdeal maximal_ideal_power(const VariableSpace& space, unsigned k)
{
    std::vector<Monomial> gens;
    Monomial m = Monomial::one(space.size());
    auto recurse = [&](auto&& self, std::size_t v, unsigned left) -> void {
        if (v + 1 == space.size())
        {
            m[v] = left;
            gens.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= left; ++e)
        {
            m[v] = e;
            self(self, v + 1, left - e);
        }
    };
    if (space.size() == 0)
        return minimalize(space, {m});
    recurse(recurse, 0, k);
    return minimalize(space, std::move(gens));
}

/** The irreducible ideal m^c = <x_i^{c_i} : c_i >= 1>. */
inline MonomialIdeal irreducible_ideal(const VariableSpace& space, const Monomial& c)
{
    std::vector<Monomial> gens;
    for (std::size_t v = 0; v < c.size(); ++v)
        if (c[v] > 0)
            gens.push_back(Monomial::variable_power(space.size(), v, c[v]));
    return minimalize(space, std::move(gens));
}

/**
 * The Alexander dual I^[a] = intersection over minimal generators b of
 * m^{a \ b}, where (a \ b)_i = a_i + 1 - b_i if b_i >= 1 and 0 otherwise.
 * The dual of the zero ideal is the unit ideal.
 */
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const Monomial& a)
{
    const auto& space = ideal.space();
    if (a.size() != space.size())
        throw DimensionError("Alexander dual exponent has the wrong number of variables");
    MonomialIdeal result = unit_ideal(space);
    for (const auto& b : ideal.generators())
    {
        if (!b.divides(a))
            throw PreconditionError("generator " + b.to_string(space) + " exceeds the exponent vector a");
        Monomial c = Monomial::one(space.size());
        for (std::size_t v = 0; v < space.size(); ++v)
            c[v] = b[v] >= 1 ? a[v] + 1 - b[v] : 0;
        result = intersect(result, irreducible_ideal(space, c));
    }
    return result;
}

/** Image under x_ij -> x_j. */
inline MonomialIdeal coarsen(const MonomialIdeal& ideal)
{
    const auto& space = ideal.space();
    if (space.kind() != VariableSpace::Kind::grid)
        throw DimensionError("coarsening needs an ideal over the n x d grid of variables");
    auto target = VariableSpace::coarse(space.cols());
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators())
    {
        Monomial m = Monomial::one(space.cols());
        for (std::size_t v = 0; v < space.size(); ++v)
            m[v % space.cols()] += g[v];
        gens.push_back(std::move(m));
    }
    return minimalize(target, std::move(gens));
}

/** Total Betti number beta_i of <x_1..x_d>^n (index 0: number of generators). */
inline std::uint64_t stable_betti(std::int64_t n, std::int64_t d, std::int64_t i)
{
    if (n < 1 || d < 1)
        throw DimensionError("stable_betti needs n, d >= 1");
    if (i < 0 || i > d - 1)
        throw std::out_of_range("homological index out of range");
    std::uint64_t sum = 0;
    for (std::int64_t l = 1; l <= d; ++l)
        sum += binomial(n - 2 + l, n - 1) * binomial(l - 1, i);
    return sum;
}

/** Number of k-dimensional cells in the decomposition of a generic arrangement of n hyperplanes in T^{d-1}. */
inline std::vector<std::uint64_t> generic_fvector(std::int64_t n, std::int64_t d)
{
    if (n < 1 || d < 1)
        throw DimensionError("generic_fvector needs n, d >= 1");
    std::vector<std::uint64_t> f(static_cast<std::size_t>(d), 0);
    for (std::int64_t k = 0; k < d; ++k)
        for (std::int64_t l = 0; l <= k; ++l)
            f[static_cast<std::size_t>(k)] += binomial(n + d - 2 - l, n - 1) * binomial(d - 1 - l, d - 1 - k);
    return f;
}

}   // namespace tropres
