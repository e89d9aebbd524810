#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace tropres {

/**
 * A system of difference constraints p_j - p_k <= c_kj on d unknowns, i.e. a
 * weighted digraph with an arc k -> j of weight c_kj.  Absent arcs mean +inf.
 *
 * After close() the stored bounds are the all-pairs shortest path distances
 * D(k,j), the tightest bound on p_j - p_k implied by the system.  The system
 * is feasible iff the graph has no negative cycle.
 */
template <typename Scalar>
class DifferenceConstraints
{
    public:
        DifferenceConstraints() = default;

        explicit DifferenceConstraints(std::size_t d) : d_(d), w_(d * d, Scalar(0)), finite_(d * d, 0)
        {
            for (std::size_t k = 0; k < d; ++k)
                finite_[k * d + k] = 1;
        }

        std::size_t size() const { return d_; }
        bool closed() const { return closed_; }

        bool has_bound(std::size_t k, std::size_t j) const { return finite_[k * d_ + j] != 0; }
        const Scalar& bound(std::size_t k, std::size_t j) const { return w_[k * d_ + j]; }

        /** Intersect with p_j - p_k <= c.  Invalidates the closure. */
        void add_bound(std::size_t k, std::size_t j, const Scalar& c)
        {
            check_index(k, j);
            std::size_t x = k * d_ + j;
            if (!finite_[x] || c < w_[x])
            {
                w_[x] = c;
                finite_[x] = 1;
                closed_ = false;
            }
        }

        /** Floyd-Warshall closure.  Returns feasibility. */
        bool close()
        {
            for (std::size_t m = 0; m < d_; ++m)
                for (std::size_t a = 0; a < d_; ++a)
                {
                    if (!finite_[a * d_ + m])
                        continue;
                    for (std::size_t b = 0; b < d_; ++b)
                    {
                        if (!finite_[m * d_ + b])
                            continue;
                        Scalar via = w_[a * d_ + m] + w_[m * d_ + b];
                        std::size_t x = a * d_ + b;
                        if (!finite_[x] || via < w_[x])
                        {
                            w_[x] = via;
                            finite_[x] = 1;
                        }
                    }
                    // stop as soon as a negative cycle shows up; otherwise the
                    // weights keep decreasing geometrically
                    if (w_[a * d_ + a] < 0)
                    {
                        closed_ = true;
                        feasible_ = false;
                        return false;
                    }
                }
            feasible_ = true;
            for (std::size_t k = 0; k < d_; ++k)
                if (w_[k * d_ + k] < 0)
                    feasible_ = false;
            closed_ = true;
            return feasible_;
        }

        /** Feasibility of a closed system. */
        bool feasible() const
        {
            if (!closed_)
                throw PreconditionError("feasibility queried on a system that is not closed");
            return feasible_;
        }

        /**
         * Add p_j - p_k <= c to a closed feasible system and restore closure in
         * O(d^2).  Returns false (and leaves the system unusable) if the new
         * bound creates a negative cycle.
         */
        bool tighten(std::size_t k, std::size_t j, const Scalar& c)
        {
            check_index(k, j);
            if (!closed_ || !feasible_)
                throw PreconditionError("tighten requires a closed feasible system");
            std::size_t kj = k * d_ + j;
            if (finite_[kj] && !(c < w_[kj]))
                return true;
            if (finite_[j * d_ + k] && w_[j * d_ + k] + c < 0)
            {
                feasible_ = false;
                return false;
            }
            for (std::size_t a = 0; a < d_; ++a)
            {
                if (!finite_[a * d_ + k])
                    continue;
                Scalar head = w_[a * d_ + k] + c;
                for (std::size_t b = 0; b < d_; ++b)
                {
                    if (!finite_[j * d_ + b])
                        continue;
                    Scalar via = head + w_[j * d_ + b];
                    std::size_t x = a * d_ + b;
                    if (!finite_[x] || via < w_[x])
                    {
                        w_[x] = via;
                        finite_[x] = 1;
                    }
                }
            }
            return true;
        }

        /** Whether p_k - p_j is forced to be constant (a zero-weight cycle through k and j). */
        bool forced_equal(std::size_t k, std::size_t j) const
        {
            return finite_[k * d_ + j] && finite_[j * d_ + k] && w_[k * d_ + j] + w_[j * d_ + k] == 0;
        }

        /** Number of classes of the forced-equality relation on the unknowns. */
        std::size_t forced_components() const
        {
            if (!closed_ || !feasible_)
                throw PreconditionError("forced equalities need a closed feasible system");
            std::vector<std::size_t> parent(d_);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](std::size_t x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            std::size_t components = d_;
            for (std::size_t k = 0; k < d_; ++k)
                for (std::size_t j = k + 1; j < d_; ++j)
                    if (forced_equal(k, j))
                    {
                        auto a = find(k), b = find(j);
                        if (a != b)
                        {
                            parent[a] = b;
                            --components;
                        }
                    }
            return components;
        }

        bool has_forced_equality() const
        {
            for (std::size_t k = 0; k < d_; ++k)
                for (std::size_t j = k + 1; j < d_; ++j)
                    if (forced_equal(k, j))
                        return true;
            return false;
        }

    private:
        void check_index(std::size_t k, std::size_t j) const
        {
            if (k >= d_ || j >= d_)
                throw std::out_of_range("constraint index out of range");
        }

        std::size_t d_ = 0;
        std::vector<Scalar> w_;
        std::vector<std::uint8_t> finite_;
        bool closed_ = true;
        bool feasible_ = true;
};

/** Feasibility of a (not necessarily closed) system; closes a copy. */
template <typename Scalar>
bool feasible(DifferenceConstraints<Scalar> system)
{
    return system.close();
}

}   // namespace tropres
