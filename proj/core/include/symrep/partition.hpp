#pragma once

#include <string>
#include <vector>

#include "symrep/errors.hpp"

namespace symrep {

// A cell of a Young diagram, 1-indexed.
struct Node {
    int row = 0;
    int col = 0;
    bool operator==(const Node& o) const { return row == o.row && col == o.col; }
    bool operator!=(const Node& o) const { return !(*this == o); }
};

// Weakly decreasing sequence of positive parts; the empty sequence is the
// unique partition of 0. Canonicalized on construction (trailing zeros
// stripped). Textual form is comma separated, with `a^k` exponent sugar
// accepted on input.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int r) const { return (r >= 1 && r <= rows()) ? parts_[r - 1] : 0; }
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    std::string str() const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    bool contains(const Node& nd) const { return nd.col >= 1 && nd.col <= part(nd.row); }

    std::vector<Node> removable_nodes() const;
    std::vector<Node> addable_nodes() const;
    Node top_removable() const; // smallest row among removable nodes
    Partition remove(const Node& nd) const;
    Partition add(const Node& nd) const;
    Partition conjugate() const;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

int residue_of(const Node& nd, int p);

struct SignedRimEntry {
    Node node;
    char sign; // '+' addable, '-' removable
};

// the i-signature read along the rim from bottom left to top right
std::vector<SignedRimEntry> signature(const Partition& lam, int i, int p);
// cancel adjacent "-+" pairs until none remain
std::vector<SignedRimEntry> reduced_signature(const Partition& lam, int i, int p);

std::vector<Node> normal_nodes(const Partition& lam, int i, int p);
std::vector<Node> conormal_nodes(const Partition& lam, int i, int p);
int eps_i(const Partition& lam, int i, int p);
// all normal nodes of every residue, with their residues
std::vector<std::pair<Node, int>> all_normal_nodes(const Partition& lam, int p);

// good node = first surviving '-' (bottom-most normal); cogood = last
// surviving '+' (top-most conormal). Removing/adding these preserves
// p-regularity.
Node good_node(const Partition& lam, int i, int p);     // throws if eps_i = 0
Node cogood_node(const Partition& lam, int i, int p);   // throws if none

bool is_p_regular(const Partition& lam, int p);
void require_p_regular(const Partition& lam, int p, const char* who);

bool is_JS(const Partition& lam, int p);
// the top removable node, available whenever is_JS holds
Node js_removal_target(const Partition& lam, int p);

// Mullineux map, computed by the good-node recursion
Partition mullineux(const Partition& lam, int p);
// independent implementation: rim-stripping symbols
Partition mullineux_via_symbol(const Partition& lam, int p);
// the symbol itself: rows (strip size a_i, row count r_i)
std::vector<std::pair<int, int>> mullineux_symbol(const Partition& lam, int p);

Partition beta(int n);                        // near-hook two-row partition
std::vector<int> dbl(const Partition& lam);   // concatenated beta blocks (a composition)

// whether the restriction to the alternating group splits
bool in_PA(const Partition& lam, int p);

std::vector<Partition> all_partitions(int n);
std::vector<Partition> p_regular_partitions(int n, int p);

} // namespace symrep
