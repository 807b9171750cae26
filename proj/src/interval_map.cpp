#include "corput/interval_map.hpp"

#include <algorithm>
#include <cmath>

#include "corput/errors.hpp"

namespace corput {

PLMap PLMap::validated(std::vector<Branch> branches, std::string name, double tol) {
    if (branches.empty())
        throw UsageError("map needs at least one branch");
    std::sort(branches.begin(), branches.end(),
              [](const Branch& a, const Branch& b) { return a.left < b.left; });

    if (std::abs(branches.front().left) > tol)
        throw UsageError("partition must start at 0");
    if (std::abs(branches.back().right - 1.0) > tol)
        throw UsageError("partition must end at 1");

    double beta = branches.front().slope;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const Branch& b = branches[i];
        if (b.right - b.left <= tol)
            throw UsageError("branch cell is empty or reversed");
        if (i + 1 < branches.size() && std::abs(branches[i + 1].left - b.right) > tol)
            throw UsageError("gap or overlap in the partition");
        if (b.sign != +1 && b.sign != -1)
            throw UsageError("branch sign must be +1 or -1");
        if (b.slope <= 1.0 + tol)
            throw UsageError("map is not expanding: slope magnitude must exceed 1");
        if (std::abs(b.slope - beta) > tol * std::max(1.0, beta))
            throw UsageError("all branches must share the same slope magnitude");
        if (b.image_left < -tol || b.image_right > 1.0 + tol || b.image_right - b.image_left <= tol)
            throw UsageError("branch image must be a nonempty subinterval of [0,1]");
        double want = b.slope * (b.right - b.left);
        if (std::abs((b.image_right - b.image_left) - want) > tol * std::max(1.0, want))
            throw UsageError("branch image width does not match slope (affinity)");
    }

    PLMap m;
    m.branches_ = std::move(branches);
    m.beta_ = beta;
    m.xi_ = std::log(beta);
    m.tol_ = tol;
    m.name_ = std::move(name);
    return m;
}

int PLMap::cell_of(double x) const {
    int n = alphabet_size();
    if (x >= branches_.back().left)
        return n - 1; // right endpoint 1 folds into the last cell
    int lo = 0, hi = n - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (x >= branches_[static_cast<std::size_t>(mid)].left)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

int PLMap::cell_of_signed(double x, int side) const {
    int n = alphabet_size();
    if (side > 0) {
        // x in (l, r]
        for (int a = 0; a < n; ++a)
            if (x <= branches_[static_cast<std::size_t>(a)].right + tol_ &&
                x > branches_[static_cast<std::size_t>(a)].left + tol_)
                return a;
        return 0; // x == 0 from below cannot occur; keep it defined
    }
    // x in [l, r)
    for (int a = 0; a < n; ++a)
        if (x >= branches_[static_cast<std::size_t>(a)].left - tol_ &&
            x < branches_[static_cast<std::size_t>(a)].right - tol_)
            return a;
    return n - 1;
}

double PLMap::apply(int a, double x) const {
    const Branch& b = branches_[static_cast<std::size_t>(a)];
    double y = b.sign > 0 ? b.image_left + b.slope * (x - b.left)
                          : b.image_right - b.slope * (x - b.left);
    return std::clamp(y, 0.0, 1.0);
}

std::optional<double> PLMap::branch_inverse(int a, double x) const {
    const Branch& b = branches_[static_cast<std::size_t>(a)];
    double y = b.sign > 0 ? b.left + (x - b.image_left) / b.slope
                          : b.left + (b.image_right - x) / b.slope;
    if (y < b.left || y >= b.right)
        return std::nullopt;
    return y;
}

int word_sign(const PLMap& map, const Word& w) {
    int s = +1;
    for (int a : w)
        s *= map.branch(a).sign;
    return s;
}

Word expansion(const PLMap& map, double x, int n) {
    Word w;
    w.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int a = map.cell_of(x);
        w.push_back(a);
        x = map.apply(a, x);
        if (x >= 1.0)
            x = std::nextafter(1.0, 0.0);
    }
    return w;
}

std::optional<double> point_of_wx(const PLMap& map, const Word& w, double x) {
    double y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto inv = map.branch_inverse(*it, y);
        if (!inv)
            return std::nullopt;
        y = *inv;
    }
    // Guard against endpoint ambiguity and float drift at cell boundaries:
    // the constructed point must realize the word as its itinerary and map
    // forward onto x within the amplified roundoff.
    int n = static_cast<int>(w.size());
    if (expansion(map, y, n) != w)
        return std::nullopt;
    double fwd = y;
    for (auto it = w.begin(); it != w.end(); ++it)
        fwd = map.apply(*it, fwd);
    double tol = 4.0 * std::pow(map.beta(), n) * 1e-16 + 1e-12;
    if (std::abs(fwd - x) > tol)
        return std::nullopt;
    return y;
}

std::optional<std::pair<double, double>> cylinder(const PLMap& map, const Word& w) {
    if (w.empty())
        return std::make_pair(0.0, 1.0);
    const double kEmpty = 1e-12;
    const Branch& last = map.branch(w.back());
    double lo = last.left, hi = last.right;
    for (auto it = std::next(w.rbegin()); it != w.rend(); ++it) {
        const Branch& b = map.branch(*it);
        double p = std::max(lo, b.image_left);
        double q = std::min(hi, b.image_right);
        if (q - p <= kEmpty)
            return std::nullopt;
        double u = b.sign > 0 ? b.left + (p - b.image_left) / b.slope
                              : b.left + (b.image_right - q) / b.slope;
        double v = b.sign > 0 ? b.left + (q - b.image_left) / b.slope
                              : b.left + (b.image_right - p) / b.slope;
        lo = u;
        hi = v;
    }
    if (hi - lo <= kEmpty)
        return std::nullopt;
    return std::make_pair(lo, hi);
}

bool word_less(const PLMap& map, const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    int n = static_cast<int>(a.size());
    int k = -1;
    for (int i = n - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
            k = i;
            break;
        }
    if (k < 0)
        return false;
    int suffix_sign = +1;
    for (int i = k + 1; i < n; ++i)
        suffix_sign *= map.branch(a[static_cast<std::size_t>(i)]).sign;
    bool natural = a[static_cast<std::size_t>(k)] < b[static_cast<std::size_t>(k)];
    return suffix_sign > 0 ? natural : !natural;
}

std::vector<Word> words_of_length(const PLMap& map, int n, std::size_t max_words) {
    if (n < 0)
        throw UsageError("word length must be >= 0");
    std::vector<Word> level;
    if (n == 0) {
        level.push_back(Word{});
        return level;
    }

    // Depth-first extension tracking the image interval F^k(<w>); a word is
    // admissible iff the image never collapses.
    const double kEmpty = 1e-12;
    struct Frame {
        Word w;
        double lo, hi; // F^{|w|}(<w>)
    };
    std::vector<Frame> stack;
    for (int a = map.alphabet_size() - 1; a >= 0; --a) {
        const Branch& b = map.branch(a);
        stack.push_back({Word{a}, b.image_left, b.image_right});
    }
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (static_cast<int>(f.w.size()) == n) {
            if (level.size() >= max_words)
                throw ResourceError("word level exceeds the budget of " +
                                    std::to_string(max_words) + " words");
            level.push_back(std::move(f.w));
            continue;
        }
        for (int a = map.alphabet_size() - 1; a >= 0; --a) {
            const Branch& b = map.branch(a);
            double p = std::max(f.lo, b.left);
            double q = std::min(f.hi, b.right);
            if (q - p <= kEmpty)
                continue;
            Frame g;
            g.w = f.w;
            g.w.push_back(a);
            if (b.sign > 0) {
                g.lo = b.image_left + b.slope * (p - b.left);
                g.hi = b.image_left + b.slope * (q - b.left);
            } else {
                g.lo = b.image_right - b.slope * (q - b.left);
                g.hi = b.image_right - b.slope * (p - b.left);
            }
            stack.push_back(std::move(g));
        }
    }
    std::sort(level.begin(), level.end(),
              [&](const Word& a, const Word& b) { return word_less(map, a, b); });
    return level;
}

SignedOrbit signed_orbit(const PLMap& map, double value, int side, int depth) {
    SignedOrbit o;
    o.value.reserve(static_cast<std::size_t>(depth) + 1);
    o.side.reserve(static_cast<std::size_t>(depth) + 1);
    o.symbol.reserve(static_cast<std::size_t>(depth));
    o.value.push_back(value);
    o.side.push_back(side);
    for (int i = 0; i < depth; ++i) {
        double v = o.value.back();
        int s = o.side.back();
        if (v < -map.tol() || v > 1.0 + map.tol())
            throw NumericalError("signed orbit left [0,1]");
        int a = map.cell_of_signed(v, s);
        const Branch& b = map.branch(a);
        double next = b.sign > 0 ? b.image_left + b.slope * (v - b.left)
                                 : b.image_right - b.slope * (v - b.left);
        next = std::clamp(next, 0.0, 1.0);
        o.symbol.push_back(a);
        o.value.push_back(next);
        o.side.push_back(s * b.sign);
    }
    return o;
}

MarkovInfo markov_structure(const PLMap& map, int orbit_depth) {
    MarkovInfo info;
    int n = map.alphabet_size();
    double tol = map.tol();

    // Partition endpoint values (unique).
    std::vector<double> cuts;
    cuts.push_back(map.branch(0).left);
    for (int a = 0; a < n; ++a)
        cuts.push_back(map.branch(a).right);
    auto is_cut = [&](double v) {
        for (double c : cuts)
            if (std::abs(v - c) <= tol)
                return true;
        return false;
    };

    bool markov = true;
    for (int a = 0; a < n && markov; ++a) {
        const Branch& b = map.branch(a);
        if (!is_cut(b.image_left) || !is_cut(b.image_right))
            markov = false;
    }

    info.markov = markov;
    if (markov) {
        info.transitions.a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Branch& ba = map.branch(a);
                const Branch& bb = map.branch(b);
                if (ba.image_left <= bb.left + tol && bb.right <= ba.image_right + tol)
                    info.transitions.a[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
            }
    }

    // Classify every signed endpoint by its forward orbit (also meaningful
    // for Markov maps, where every endpoint lands on a cut at step 1).
    for (int a = 0; a < n; ++a) {
        for (int side : {-1, +1}) {
            SignedEndpoint e;
            e.cell = a;
            e.side = side;
            e.value = side > 0 ? map.branch(a).right : map.branch(a).left;
            SignedOrbit orbit = signed_orbit(map, e.value, side, orbit_depth);
            for (int k = 1; k <= orbit_depth; ++k)
                if (is_cut(orbit.value[static_cast<std::size_t>(k)])) {
                    e.markov = true;
                    e.hit_step = k;
                    break;
                }
            if (!e.markov)
                ++info.non_markov_count;
            info.endpoints.push_back(e);
        }
    }
    return info;
}

} // namespace corput
