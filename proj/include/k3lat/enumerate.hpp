#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "k3lat/lattice.hpp"
#include "k3lat/linalg.hpp"

namespace k3lat {

enum class BoundMode { inclusive, exclusive };
enum class Collect { count_only, vectors };

/// Exact norm value -> number of vectors with that norm.
using NormHistogram = std::map<Rational, std::uint64_t>;

struct EnumQuery {
    IntMatrix gram;
    RatVector offset;  // empty means zero
    Rational bound;
    BoundMode bound_mode = BoundMode::inclusive;
    Collect collect = Collect::count_only;
    unsigned threads = 1;  // 0: K3LAT_THREADS, else hardware concurrency
};

struct EnumResult {
    NormHistogram histogram;
    std::vector<IntVector> vectors;  // lexicographic; filled only when collecting

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [norm, count] : histogram) t += count;
        return t;
    }
    std::uint64_t count(const Rational& norm) const {
        auto it = histogram.find(norm);
        return it == histogram.end() ? 0 : it->second;
    }
};

/// Worker count for a request of `requested` threads (0 = automatic).
/// K3LAT_THREADS caps automatic selection; 0 or unset means hardware
/// concurrency.
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("K3LAT_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v != 0) return static_cast<unsigned>(std::min<unsigned long>(v, 1024));
    }
    return hw;
}

namespace detail {

/// Fincke-Pohst walk over { x in Z^n : norm(x + offset) <= bound } with the
/// last coordinate outermost.  Interval endpoints are found from a floating
/// guess and then corrected with exact comparisons, so the walk is exact.
class ShortVectorWalker {
  public:
    ShortVectorWalker(const LdlDecomposition& ldl, const RatVector& offset, const Rational& bound)
        : ldl_(ldl), offset_(offset), bound_(bound), n_(ldl.rank()), x_(n_), y_(n_) {
        if (offset_.empty()) offset_.assign(n_, Rational(0));
        has_offset_ = std::any_of(offset_.begin(), offset_.end(), [](const Rational& r) { return r != 0; });
    }

    std::size_t rank() const noexcept { return n_; }

    /// Integer range [lo, hi] for the outermost coordinate; empty if lo > hi.
    std::pair<Integer, Integer> top_range() {
        if (n_ == 0) return {Integer(0), Integer(-1)};
        return range(n_ - 1, bound_);
    }

    /// Visits every vector whose outermost coordinate equals `top`.
    /// visit(const IntVector& x, const Rational& norm_of_x_plus_offset).
    template <class Visit>
    void walk_top(const Integer& top, Visit&& visit) {
        const std::size_t i = n_ - 1;
        const Rational c = center(i);
        Rational rem = bound_ - ldl_.pivots[i] * sq(Rational(top) - c);
        if (sgn(rem) < 0) return;
        assign(i, top);
        if (i == 0) {
            visit(x_, bound_ - rem);
        } else {
            descend(i - 1, rem, visit);
        }
    }

    template <class Visit>
    void walk_all(Visit&& visit) {
        if (n_ == 0) {
            visit(x_, Rational(0));
            return;
        }
        auto [lo, hi] = top_range();
        for (Integer t = lo; t <= hi; ++t) walk_top(t, visit);
    }

  private:
    static Rational sq(const Rational& r) { return r * r; }

    void assign(std::size_t i, const Integer& v) {
        x_[i] = v;
        if (has_offset_) {
            y_[i] = v;
            y_[i] += offset_[i];
        }
    }

    // Value of x_i that minimises the i-th square given the outer coordinates.
    Rational center(std::size_t i) const {
        Rational c(0);
        if (has_offset_) {
            c -= offset_[i];
            for (std::size_t j = i + 1; j < n_; ++j) c -= ldl_.mu(i, j) * y_[j];
        } else {
            for (std::size_t j = i + 1; j < n_; ++j)
                if (x_[j] != 0) c -= ldl_.mu(i, j) * x_[j];
        }
        return c;
    }

    std::pair<Integer, Integer> range(std::size_t i, const Rational& rem) const {
        return range_with_center(i, rem, center(i));
    }

    std::pair<Integer, Integer> range_with_center(std::size_t i, const Rational& rem,
                                                  const Rational& c) const {
        const Rational limit = rem / ldl_.pivots[i];  // need (x - c)^2 <= limit
        auto fits = [&](const Integer& v) { return sq(Rational(v) - c) <= limit; };
        const Integer mid = round_nearest(c);
        if (!fits(mid)) return {Integer(0), Integer(-1)};
        const double cd = c.get_d();
        const double rd = std::sqrt(std::max(0.0, limit.get_d()));
        Integer lo(std::ceil(cd - rd)), hi(std::floor(cd + rd));
        if (lo > mid) lo = mid;
        if (hi < mid) hi = mid;
        while (lo < mid && !fits(lo)) ++lo;
        while (fits(lo - 1)) --lo;
        while (hi > mid && !fits(hi)) --hi;
        while (fits(hi + 1)) ++hi;
        return {lo, hi};
    }

    template <class Visit>
    void descend(std::size_t i, const Rational& rem, Visit& visit) {
        const Rational c = center(i);
        auto [lo, hi] = range_with_center(i, rem, c);
        Rational diff, next;
        for (Integer v = lo; v <= hi; ++v) {
            diff = v;
            diff -= c;
            next = rem - ldl_.pivots[i] * diff * diff;
            assign(i, v);
            if (i == 0) {
                visit(x_, bound_ - next);
            } else {
                descend(i - 1, next, visit);
            }
        }
        x_[i] = 0;
        if (has_offset_) y_[i] = 0;
    }

    const LdlDecomposition& ldl_;
    RatVector offset_;
    Rational bound_;
    std::size_t n_;
    bool has_offset_ = false;
    IntVector x_;
    RatVector y_;
};

}  // namespace detail

/// Folds `visit(acc, x, norm)` over every lattice vector x with
/// norm(x + offset) within the bound, partitioning the outermost coordinate
/// across workers.  Per-worker accumulators are combined with
/// `merge(acc, other)`, which must be commutative for the result to be
/// independent of scheduling.
template <class Acc, class Visit, class Merge>
Acc accumulate_short_vectors(const IntMatrix& gram, const RatVector& offset, const Rational& bound,
                             BoundMode mode, unsigned threads, Acc init, Visit visit, Merge merge) {
    const LdlDecomposition ldl = rational_cholesky(gram);
    if (!offset.empty() && offset.size() != gram.rows())
        throw InvalidArgument("offset length does not match rank");

    auto filtered = [&](Acc& acc) {
        return [&acc, &visit, &bound, mode](const IntVector& x, const Rational& norm) {
            if (mode == BoundMode::exclusive && norm == bound) return;
            visit(acc, x, norm);
        };
    };

    detail::ShortVectorWalker probe(ldl, offset, bound);
    const unsigned workers = resolve_threads(threads);
    if (workers <= 1 || probe.rank() == 0) {
        Acc acc = std::move(init);
        probe.walk_all(filtered(acc));
        return acc;
    }

    auto [lo, hi] = probe.top_range();
    std::vector<Integer> tops;
    for (Integer t = lo; t <= hi; ++t) tops.push_back(t);
    const std::size_t used = std::min<std::size_t>(workers, std::max<std::size_t>(tops.size(), 1));

    std::vector<Acc> partial(used, init);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < used; ++w) {
            pool.emplace_back([&, w] {
                detail::ShortVectorWalker walker(ldl, offset, bound);
                auto f = filtered(partial[w]);
                for (std::size_t idx = w; idx < tops.size(); idx += used) walker.walk_top(tops[idx], f);
            });
        }
    }
    Acc acc = std::move(init);
    for (auto& p : partial) merge(acc, std::move(p));
    return acc;
}

inline void merge_histograms(NormHistogram& into, const NormHistogram& from) {
    for (const auto& [norm, count] : from) into[norm] += count;
}

/// Exact histogram (and optionally the list) of lattice points x with
/// norm(x + offset) within the bound.
inline EnumResult enumerate(const EnumQuery& q) {
    const bool keep = q.collect == Collect::vectors;
    EnumResult r = accumulate_short_vectors(
        q.gram, q.offset, q.bound, q.bound_mode, q.threads, EnumResult{},
        [keep](EnumResult& acc, const IntVector& x, const Rational& norm) {
            ++acc.histogram[norm];
            if (keep) acc.vectors.push_back(x);
        },
        [](EnumResult& acc, EnumResult&& other) {
            merge_histograms(acc.histogram, other.histogram);
            acc.vectors.insert(acc.vectors.end(), std::make_move_iterator(other.vectors.begin()),
                               std::make_move_iterator(other.vectors.end()));
        });
    if (keep) std::sort(r.vectors.begin(), r.vectors.end());
    return r;
}

/// Gram matrix of the positive-definite scaling of a definite lattice.
inline IntMatrix positive_definite_gram(const Lattice& l) {
    if (is_positive_definite(l.gram())) return l.gram();
    IntMatrix neg = negated(l.gram());
    if (is_positive_definite(neg)) return neg;
    throw IndefiniteLattice();
}

/// Number of vectors of norm 2 in the positive convention (norm -2 in the
/// negative-definite convention).
inline Integer root_count(const Lattice& l, unsigned threads = 1) {
    EnumQuery q{positive_definite_gram(l), {}, Rational(2), BoundMode::inclusive,
                Collect::count_only, threads};
    return Integer(static_cast<unsigned long>(enumerate(q).count(Rational(2))));
}

}  // namespace k3lat
