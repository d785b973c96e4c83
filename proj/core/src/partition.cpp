#include "symrep/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "symrep/gf.hpp"

namespace symrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw invalid_parameter("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw invalid_parameter("Partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw invalid_parameter("Partition: empty component in '" + text + "'");
        auto caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                parts.push_back(std::stoi(tok));
            } else {
                const int v = std::stoi(tok.substr(0, caret));
                const int k = std::stoi(tok.substr(caret + 1));
                if (k < 0) throw invalid_parameter("Partition: negative exponent");
                for (int i = 0; i < k; ++i) parts.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw invalid_parameter("Partition: cannot parse '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Node> Partition::removable_nodes() const {
    std::vector<Node> out;
    for (int r = 1; r <= rows(); ++r)
        if (part(r) > part(r + 1)) out.push_back({r, part(r)});
    return out;
}

std::vector<Node> Partition::addable_nodes() const {
    std::vector<Node> out;
    if (empty()) return {{1, 1}};
    out.push_back({1, parts_[0] + 1});
    for (int r = 2; r <= rows(); ++r)
        if (part(r - 1) > part(r)) out.push_back({r, part(r) + 1});
    out.push_back({rows() + 1, 1});
    return out;
}

Node Partition::top_removable() const {
    if (empty()) throw invalid_parameter("top_removable: empty partition");
    for (int r = 1; r <= rows(); ++r)
        if (part(r) > part(r + 1)) return {r, part(r)};
    throw consistency_error("top_removable: unreachable");
}

Partition Partition::remove(const Node& nd) const {
    if (nd.row < 1 || nd.row > rows() || part(nd.row) != nd.col ||
        part(nd.row) == part(nd.row + 1))
        throw invalid_parameter("remove: node is not removable");
    std::vector<int> p = parts_;
    p[nd.row - 1] -= 1;
    return Partition(std::move(p));
}

Partition Partition::add(const Node& nd) const {
    std::vector<int> p = parts_;
    if (nd.row == rows() + 1) {
        if (nd.col != 1) throw invalid_parameter("add: node is not addable");
        p.push_back(1);
    } else {
        if (nd.row < 1 || nd.row > rows() || nd.col != p[nd.row - 1] + 1 ||
            (nd.row > 1 && p[nd.row - 2] < nd.col))
            throw invalid_parameter("add: node is not addable");
        p[nd.row - 1] += 1;
    }
    return Partition(std::move(p));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int c = 1; c <= first(); ++c) {
        int h = 0;
        for (int v : parts_)
            if (v >= c) ++h;
        out.push_back(h);
    }
    return Partition(std::move(out));
}

int residue_of(const Node& nd, int p) {
    int r = (nd.col - nd.row) % p;
    return r < 0 ? r + p : r;
}

std::vector<SignedRimEntry> signature(const Partition& lam, int i, int p) {
    if (!is_prime(p)) throw invalid_parameter("signature: p must be prime");
    std::vector<SignedRimEntry> seq;
    for (const auto& nd : lam.addable_nodes())
        if (residue_of(nd, p) == i) seq.push_back({nd, '+'});
    for (const auto& nd : lam.removable_nodes())
        if (residue_of(nd, p) == i) seq.push_back({nd, '-'});
    // rim order bottom-left to top-right: row descending, then column ascending
    std::sort(seq.begin(), seq.end(), [](const SignedRimEntry& a, const SignedRimEntry& b) {
        if (a.node.row != b.node.row) return a.node.row > b.node.row;
        return a.node.col < b.node.col;
    });
    return seq;
}

std::vector<SignedRimEntry> reduced_signature(const Partition& lam, int i, int p) {
    std::vector<SignedRimEntry> stack;
    for (const auto& e : signature(lam, i, p)) {
        if (e.sign == '+' && !stack.empty() && stack.back().sign == '-')
            stack.pop_back();
        else
            stack.push_back(e);
    }
    return stack;
}

std::vector<Node> normal_nodes(const Partition& lam, int i, int p) {
    std::vector<Node> out;
    for (const auto& e : reduced_signature(lam, i, p))
        if (e.sign == '-') out.push_back(e.node);
    return out;
}

std::vector<Node> conormal_nodes(const Partition& lam, int i, int p) {
    std::vector<Node> out;
    for (const auto& e : reduced_signature(lam, i, p))
        if (e.sign == '+') out.push_back(e.node);
    return out;
}

int eps_i(const Partition& lam, int i, int p) { return int(normal_nodes(lam, i, p).size()); }

std::vector<std::pair<Node, int>> all_normal_nodes(const Partition& lam, int p) {
    std::vector<std::pair<Node, int>> out;
    for (int i = 0; i < p; ++i)
        for (const auto& nd : normal_nodes(lam, i, p)) out.emplace_back(nd, i);
    return out;
}

Node good_node(const Partition& lam, int i, int p) {
    auto nn = normal_nodes(lam, i, p);
    if (nn.empty()) throw invalid_parameter("good_node: no normal node of this residue");
    return nn.front();
}

Node cogood_node(const Partition& lam, int i, int p) {
    auto cn = conormal_nodes(lam, i, p);
    if (cn.empty()) throw invalid_parameter("cogood_node: no conormal node of this residue");
    return cn.back();
}

bool is_p_regular(const Partition& lam, int p) {
    if (!is_prime(p)) throw invalid_parameter("is_p_regular: p must be prime");
    int run = 1;
    for (int r = 2; r <= lam.rows(); ++r) {
        if (lam.part(r) == lam.part(r - 1)) {
            if (++run >= p) return false;
        } else {
            run = 1;
        }
    }
    return run < p || lam.rows() == 0;
}

void require_p_regular(const Partition& lam, int p, const char* who) {
    if (!is_p_regular(lam, p))
        throw invalid_parameter(std::string(who) + ": partition is not p-regular");
}

namespace {

bool is_js_by_signature(const Partition& lam, int p) {
    auto nn = all_normal_nodes(lam, p);
    return nn.size() == 1 && nn[0].first == lam.top_removable();
}

bool is_js_by_divisibility(const Partition& lam, int p) {
    // lam = (l_1^{a_1}, ..., l_m^{a_m}) with l_1 > ... > l_m
    std::vector<std::pair<int, int>> runs;
    for (int v : lam.parts()) {
        if (!runs.empty() && runs.back().first == v)
            ++runs.back().second;
        else
            runs.emplace_back(v, 1);
    }
    for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
        const int val = runs[k].first - runs[k + 1].first + runs[k].second + runs[k + 1].second;
        if (val % p != 0) return false;
    }
    return true;
}

} // namespace

bool is_JS(const Partition& lam, int p) {
    require_p_regular(lam, p, "is_JS");
    if (lam.empty()) return true;
    const bool a = is_js_by_signature(lam, p);
    const bool b = is_js_by_divisibility(lam, p);
    if (a != b) throw consistency_error("is_JS: the two defining conditions disagree");
    return a;
}

Node js_removal_target(const Partition& lam, int p) {
    if (!is_JS(lam, p)) throw invalid_parameter("js_removal_target: partition is not JS");
    return lam.top_removable();
}

Partition mullineux(const Partition& lam, int p) {
    require_p_regular(lam, p, "mullineux");
    if (lam.empty()) return lam;
    const Node top = lam.top_removable();
    const int i = residue_of(top, p);
    const Node g = good_node(lam, i, p);
    const Partition mu = lam.remove(g);
    const Partition nu = mullineux(mu, p);
    const int j = (p - i) % p;
    return nu.add(cogood_node(nu, j, p));
}

namespace {

// rim cells of lam, ordered from top right to bottom left
std::vector<Node> rim_cells(const Partition& lam) {
    std::vector<Node> out;
    for (int r = 1; r <= lam.rows(); ++r) {
        const int lo = std::max(1, lam.part(r + 1) == 0 ? 1 : lam.part(r + 1));
        for (int c = lam.part(r); c >= lo; --c) out.push_back({r, c});
    }
    return out;
}

// the p-rim: p-cell segments along the rim; after a full segment the next
// one starts with the first rim cell strictly below the segment's last row
std::vector<Node> p_rim(const Partition& lam, int p) {
    auto rim = rim_cells(lam);
    std::vector<Node> out;
    std::size_t i = 0;
    while (i < rim.size()) {
        int taken = 0;
        while (i < rim.size() && taken < p) {
            out.push_back(rim[i]);
            ++i;
            ++taken;
        }
        if (taken == p && i < rim.size()) {
            const int stop_row = out.back().row;
            while (i < rim.size() && rim[i].row == stop_row) ++i;
        }
    }
    return out;
}

Partition strip_p_rim(const Partition& lam, int p, int& strip_size) {
    auto cells = p_rim(lam, p);
    strip_size = int(cells.size());
    std::vector<int> counts(std::size_t(lam.rows()), 0);
    for (const auto& nd : cells) counts[std::size_t(nd.row - 1)]++;
    std::vector<int> parts;
    for (int r = 1; r <= lam.rows(); ++r) parts.push_back(lam.part(r) - counts[std::size_t(r - 1)]);
    return Partition(std::move(parts));
}

} // namespace

std::vector<std::pair<int, int>> mullineux_symbol(const Partition& lam, int p) {
    require_p_regular(lam, p, "mullineux_symbol");
    std::vector<std::pair<int, int>> sym;
    Partition cur = lam;
    while (!cur.empty()) {
        int a = 0;
        Partition next = strip_p_rim(cur, p, a);
        sym.emplace_back(a, cur.rows());
        cur = next;
    }
    return sym;
}

Partition mullineux_via_symbol(const Partition& lam, int p) {
    require_p_regular(lam, p, "mullineux_via_symbol");
    auto sym = mullineux_symbol(lam, p);
    // transform: a stays, r -> a - r + eps, eps = 1 unless p | a
    for (auto& [a, r] : sym) {
        const int eps = (a % p == 0) ? 0 : 1;
        r = a - r + eps;
    }
    // rebuild from the innermost strip outward; each step finds the unique
    // partition with the prescribed row count whose p-rim removal gives the
    // previous stage
    Partition cur; // empty
    for (auto it = sym.rbegin(); it != sym.rend(); ++it) {
        const int a = it->first, r = it->second;
        const int target_n = cur.n() + a;
        Partition found;
        bool have = false;
        // candidates: r rows, contains cur, size target_n
        std::vector<int> parts(std::size_t(r), 0);
        // depth-first over weakly decreasing part vectors bounded below by cur
        std::vector<int> lower(std::size_t(r), 1);
        for (int i = 0; i < r; ++i) lower[std::size_t(i)] = std::max(1, cur.part(i + 1));
        std::function<void(int, int, int)> rec = [&](int row, int maxv, int left) {
            if (have) return;
            if (row == r) {
                if (left != 0) return;
                Partition cand(parts);
                if (cand.rows() != r) return;
                int a2 = 0;
                Partition stripped = strip_p_rim(cand, p, a2);
                if (a2 == a && stripped == cur) {
                    found = cand;
                    have = true;
                }
                return;
            }
            const int lo = lower[std::size_t(row)];
            int remaining_rows = r - row - 1;
            for (int v = std::min(maxv, left - remaining_rows); v >= lo; --v) {
                parts[std::size_t(row)] = v;
                rec(row + 1, v, left - v);
            }
        };
        rec(0, target_n, target_n);
        if (!have) throw consistency_error("mullineux_via_symbol: strip reconstruction failed");
        cur = found;
    }
    return cur;
}

Partition beta(int n) {
    if (n < 3) throw invalid_parameter("beta: n must be at least 3");
    if (n % 2 == 0) return Partition({n / 2 + 1, n / 2 - 1});
    return Partition({(n + 1) / 2, (n - 1) / 2});
}

namespace {

std::vector<int> beta_parts_any(int m) {
    // dbl uses beta blocks for every positive part; for m <= 2 the second
    // entry vanishes and the block is a single part
    if (m == 1) return {1};
    if (m == 2) return {2};
    auto b = beta(m);
    return b.parts();
}

} // namespace

std::vector<int> dbl(const Partition& lam) {
    std::vector<int> out;
    for (int v : lam.parts()) {
        auto block = beta_parts_any(v);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

bool in_PA(const Partition& lam, int p) {
    require_p_regular(lam, p, "in_PA");
    if (p != 2) return mullineux(lam, p) == lam;
    // parse lam as dbl(mu) with mu strict and no part congruent to 2 mod 4;
    // blocks are consecutive: (a,b) with a-b=1, or a-b=2 and a+b divisible by
    // 4, or a trailing single 1
    const auto& ps = lam.parts();
    std::vector<int> mu;
    std::size_t i = 0;
    while (i < ps.size()) {
        if (i + 1 < ps.size()) {
            const int a = ps[i], b = ps[i + 1];
            const int m = a + b;
            const bool pair_ok = (a - b == 1) || (a - b == 2 && m % 4 == 0);
            if (!pair_ok) return false;
            mu.push_back(m);
            i += 2;
        } else {
            if (ps[i] != 1) return false; // single-part blocks: only beta_1
            mu.push_back(1);
            i += 1;
        }
    }
    for (std::size_t k = 0; k < mu.size(); ++k) {
        if (mu[k] % 4 == 2) return false;
        if (k > 0 && mu[k] >= mu[k - 1]) return false; // mu must be strict
    }
    return true;
}

namespace {

void gen_partitions(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int v = std::min(n, maxp); v >= 1; --v) {
        cur.push_back(v);
        gen_partitions(n - v, v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> p_regular_partitions(int n, int p) {
    std::vector<Partition> out;
    for (auto& lam : all_partitions(n))
        if (is_p_regular(lam, p)) out.push_back(lam);
    return out;
}

} // namespace symrep
