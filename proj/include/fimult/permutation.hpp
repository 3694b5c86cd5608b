#pragma once

// Permutations of [k] and injections [x] -> [y], both in 1-indexed one-line
// notation. Composition follows the usual convention: compose(g, f) is the
// map l -> g(f(l)).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fimult/errors.hpp"

namespace fimult {

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v])
                throw InvalidArgument("not a permutation of [" + std::to_string(images_.size()) +
                                      "]");
            seen[v] = true;
        }
    }

    static Permutation identity(int k) {
        std::vector<int> images(static_cast<std::size_t>(k));
        std::iota(images.begin(), images.end(), 1);
        return Permutation(std::move(images));
    }

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int l) const { return images_[static_cast<std::size_t>(l - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    bool is_identity() const {
        for (std::size_t l = 0; l < images_.size(); ++l)
            if (images_[l] != static_cast<int>(l + 1)) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t l = 0; l < images_.size(); ++l)
            inv[static_cast<std::size_t>(images_[l] - 1)] = static_cast<int>(l + 1);
        return Permutation(std::move(inv));
    }

    /// +1 or -1, from the parity of (length - number of cycles).
    int sign() const {
        std::vector<bool> seen(images_.size(), false);
        std::size_t transpositions = 0;
        for (std::size_t start = 0; start < images_.size(); ++start) {
            if (seen[start]) continue;
            std::size_t length = 0;
            for (std::size_t l = start; !seen[l]; l = static_cast<std::size_t>(images_[l] - 1)) {
                seen[l] = true;
                ++length;
            }
            transpositions += length - 1;
        }
        return transpositions % 2 == 0 ? 1 : -1;
    }

    /// Cycle lengths sorted into a partition (weakly decreasing).
    std::vector<int> cycle_type() const {
        std::vector<bool> seen(images_.size(), false);
        std::vector<int> lengths;
        for (std::size_t start = 0; start < images_.size(); ++start) {
            if (seen[start]) continue;
            int length = 0;
            for (std::size_t l = start; !seen[l]; l = static_cast<std::size_t>(images_[l] - 1)) {
                seen[l] = true;
                ++length;
            }
            lengths.push_back(length);
        }
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        return lengths;
    }

    int fixed_points() const {
        int count = 0;
        for (std::size_t l = 0; l < images_.size(); ++l)
            if (images_[l] == static_cast<int>(l + 1)) ++count;
        return count;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// g o f, i.e. first f then g.
inline Permutation compose(const Permutation& g, const Permutation& f) {
    if (g.degree() != f.degree()) throw DimensionError("composing permutations of different degree");
    std::vector<int> out(f.images().size());
    for (std::size_t l = 0; l < out.size(); ++l) out[l] = g(f.images()[l]);
    return Permutation(std::move(out));
}

/// Standard representative of a conjugacy class: cycles of weakly decreasing
/// length laid out on consecutive integers, e.g. (3,1) -> (1 2 3)(4).
inline Permutation class_representative(std::span<const int> cycle_type) {
    std::vector<int> images;
    int start = 1;
    for (int length : cycle_type) {
        if (length < 1) throw InvalidArgument("cycle lengths must be positive");
        for (int l = 0; l < length; ++l)
            images.push_back(l + 1 < length ? start + l + 1 : start);
        start += length;
    }
    return Permutation(std::move(images));
}

/// All permutations of [k] in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int k) {
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

/// An injection [x] -> [y]. The target arity is carried explicitly because
/// it is not recoverable from the images.
class Injection {
public:
    Injection() = default;

    Injection(std::vector<int> images, int target) : images_(std::move(images)), target_(target) {
        if (target_ < 0) throw InvalidArgument("negative target arity");
        std::vector<bool> seen(static_cast<std::size_t>(target_) + 1, false);
        for (int v : images_) {
            if (v < 1 || v > target_)
                throw InvalidArgument("injection image " + std::to_string(v) + " outside [1, " +
                                      std::to_string(target_) + "]");
            if (seen[static_cast<std::size_t>(v)])
                throw InvalidArgument("injection images are not distinct");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Injection identity(int x) {
        return Injection(Permutation::identity(x).images(), x);
    }

    static Injection from_permutation(const Permutation& sigma) {
        return Injection(sigma.images(), sigma.degree());
    }

    int source() const noexcept { return static_cast<int>(images_.size()); }
    int target() const noexcept { return target_; }
    int operator()(int l) const { return images_[static_cast<std::size_t>(l - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    bool is_monotone() const { return std::is_sorted(images_.begin(), images_.end()); }

    /// Only meaningful when source() == target().
    Permutation as_permutation() const {
        if (source() != target()) throw DimensionError("injection is not a bijection");
        return Permutation(images_);
    }

    auto operator<=>(const Injection&) const = default;

private:
    std::vector<int> images_;
    int target_ = 0;
};

/// g o f for f : [x] -> [y], g : [y] -> [z].
inline Injection compose(const Injection& g, const Injection& f) {
    if (f.target() != g.source()) throw DimensionError("injections are not composable");
    std::vector<int> out(f.images().size());
    for (std::size_t l = 0; l < out.size(); ++l) out[l] = g(f.images()[l]);
    return Injection(std::move(out), g.target());
}

/// f o sigma for sigma a permutation of the source of f.
inline Injection compose(const Injection& f, const Permutation& sigma) {
    if (sigma.degree() != f.source()) throw DimensionError("permutation degree != injection source");
    std::vector<int> out(sigma.images().size());
    for (std::size_t l = 0; l < out.size(); ++l) out[l] = f(sigma.images()[l]);
    return Injection(std::move(out), f.target());
}

/// sigma o f for sigma a permutation of the target of f.
inline Injection compose(const Permutation& sigma, const Injection& f) {
    if (sigma.degree() != f.target()) throw DimensionError("permutation degree != injection target");
    std::vector<int> out(f.images().size());
    for (std::size_t l = 0; l < out.size(); ++l) out[l] = sigma(f.images()[l]);
    return Injection(std::move(out), f.target());
}

/// xi(p): the permutation of [k] recording the rank of each image value, so
/// that p o xi(p)^{-1} is monotone.
inline Permutation xi(const Injection& p) {
    std::vector<int> sorted = p.images();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ranks(p.images().size());
    for (std::size_t l = 0; l < ranks.size(); ++l) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), p.images()[l]);
        ranks[l] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(ranks));
}

/// nu(f) = f o xi(f)^{-1}: the monotone injection with the same image as f.
inline Injection nu(const Injection& f) {
    std::vector<int> sorted = f.images();
    std::sort(sorted.begin(), sorted.end());
    return Injection(std::move(sorted), f.target());
}

/// Strictly increasing injections [k] -> [n], lexicographic in the image
/// sequence. OI(0, n) is the single empty map; OI(k, n) is empty for k > n.
inline std::vector<Injection> monotone_injections(int k, int n) {
    if (k < 0) throw InvalidArgument("negative arity");
    std::vector<Injection> out;
    if (k > n) return out;
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    while (true) {
        out.emplace_back(images, n);
        int pos = k - 1;
        while (pos >= 0 && images[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
        if (pos < 0) break;
        ++images[static_cast<std::size_t>(pos)];
        for (int l = pos + 1; l < k; ++l)
            images[static_cast<std::size_t>(l)] = images[static_cast<std::size_t>(l - 1)] + 1;
    }
    return out;
}

/// All injections [k] -> [n], lexicographic in the image sequence.
inline std::vector<Injection> all_injections(int k, int n) {
    if (k < 0) throw InvalidArgument("negative arity");
    std::vector<Injection> out;
    if (k > n) return out;
    std::vector<int> images;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(images.size()) == k) {
            out.emplace_back(images, n);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            images.push_back(v);
            self(self);
            images.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    extend(extend);
    return out;
}

/// n (n-1) ... (n-k+1), zero when k > n.
inline unsigned long long falling_factorial(long long n, int k) {
    unsigned long long out = 1;
    for (int l = 0; l < k; ++l) {
        if (n - l <= 0) return 0;
        out *= static_cast<unsigned long long>(n - l);
    }
    return out;
}

inline std::string to_string(const Permutation& sigma) {
    std::string out = "(";
    for (std::size_t l = 0; l < sigma.images().size(); ++l) {
        if (l) out += ",";
        out += std::to_string(sigma.images()[l]);
    }
    return out + ")";
}

/// Injections print as their concatenated images, "412", with spaces
/// when some image exceeds 9.
inline std::string to_string(const Injection& f) {
    bool wide = f.target() > 9;
    std::string out;
    for (std::size_t l = 0; l < f.images().size(); ++l) {
        if (wide && l) out += " ";
        out += std::to_string(f.images()[l]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& sigma) {
    return os << to_string(sigma);
}

inline std::ostream& operator<<(std::ostream& os, const Injection& f) {
    return os << "[" << to_string(f) << "]";
}

}  // namespace fimult
