#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace corput {

/// One affine branch of a piecewise-linear map: [left,right) is mapped with
/// slope sign*slope onto [image_left,image_right) (orientation-reversing
/// branches send left to image_right).
struct Branch {
    double left = 0.0;
    double right = 0.0;
    int sign = +1;
    double slope = 0.0; // magnitude, > 1
    double image_left = 0.0;
    double image_right = 0.0;
};

/// A validated piecewise-linear expanding map of [0,1) with constant slope
/// magnitude beta > 1.  Immutable after construction.
class PLMap {
public:
    /// Checks all structural invariants (partition, constant slope,
    /// expansion, images inside [0,1], affinity) and throws UsageError on
    /// violation.
    static PLMap validated(std::vector<Branch> branches, std::string name = "map",
                           double tol = 1e-9);

    int alphabet_size() const { return static_cast<int>(branches_.size()); }
    const Branch& branch(int a) const { return branches_[static_cast<std::size_t>(a)]; }
    const std::vector<Branch>& branches() const { return branches_; }
    double beta() const { return beta_; }
    double xi() const { return xi_; }
    double tol() const { return tol_; }
    const std::string& name() const { return name_; }

    /// Branch whose half-open cell [l,r) contains x; x == 1 belongs to the
    /// last cell.
    int cell_of(double x) const;

    /// Branch seen by the one-sided point x^side: side=+1 approaches x from
    /// below (x in (l,r]), side=-1 from above (x in [l,r)).
    int cell_of_signed(double x, int side) const;

    /// Affine image under branch a, defined on the closure of the cell.
    double apply(int a, double x) const;

    /// One forward step using the branch that contains x.
    double step(double x) const { return apply(cell_of(x), x); }

    /// Inverse branch: the y in [l_a, r_a) with F(y) = x, if any.
    std::optional<double> branch_inverse(int a, double x) const;

private:
    std::vector<Branch> branches_;
    double beta_ = 0.0;
    double xi_ = 0.0;
    double tol_ = 1e-9;
    std::string name_;
};

/// A finite symbol string over the map's alphabet.
using Word = std::vector<int>;

int word_sign(const PLMap& map, const Word& w);

/// Itinerary a_1..a_n of x: F^{i-1}(x) lies in cell a_i.
Word expansion(const PLMap& map, double x, int n);

/// The point y whose expansion starts with w and whose n-th image is x,
/// built by composing inverse branches; empty when no such point exists.
std::optional<double> point_of_wx(const PLMap& map, const Word& w, double x);

/// Cylinder interval of w as [lo,hi); empty optional when w is inadmissible.
std::optional<std::pair<double, double>> cylinder(const PLMap& map, const Word& w);

/// Strict total order on admissible words: shorter first; equal lengths are
/// compared at the highest differing position, with the direction reversed
/// when the common suffix has negative sign.
bool word_less(const PLMap& map, const Word& a, const Word& b);

/// All admissible words of length n, sorted by word_less.
/// Throws ResourceError when the level would exceed max_words.
std::vector<Word> words_of_length(const PLMap& map, int n,
                                  std::size_t max_words = std::size_t{1} << 22);

struct TransitionMatrix {
    std::vector<std::vector<int>> a; // a[from][to] in {0,1}
    int size() const { return static_cast<int>(a.size()); }
};

/// One-sided signed endpoint of a cell: side=+1 is sup<a> approached from
/// below, side=-1 is inf<a> approached from above.
struct SignedEndpoint {
    int cell = 0;
    int side = +1;
    double value = 0.0;
    bool markov = false; // forward orbit hits a partition endpoint
    int hit_step = -1;   // first step where it does, when markov
};

struct MarkovInfo {
    bool markov = false;
    TransitionMatrix transitions;           // valid only when markov
    std::vector<SignedEndpoint> endpoints;  // 2*|alphabet| entries, cell-major, '-' then '+'
    int non_markov_count = 0;
};

/// Markov test per branch-image/cell alignment; when it fails, classifies
/// every signed endpoint by following its orbit up to orbit_depth.
MarkovInfo markov_structure(const PLMap& map, int orbit_depth = 50);

/// One-sided orbit of a signed point: values, sides and symbols for steps
/// 0..depth (index 0 is the starting point).
struct SignedOrbit {
    std::vector<double> value;
    std::vector<int> side;
    std::vector<int> symbol; // symbol[i] is the branch applied at step i (size depth)
};

SignedOrbit signed_orbit(const PLMap& map, double value, int side, int depth);

} // namespace corput
