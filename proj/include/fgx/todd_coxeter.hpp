// Coset enumeration over the trivial subgroup (HLT relator scanning with
// coincidence handling), yielding the regular-representation Cayley table.
#pragma once

#include <deque>
#include <string>
#include <vector>

#include "group_table.hpp"
#include "presentation.hpp"

namespace fgx {

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& pres, int max_cosets)
      : pres_(pres), nl_(2 * int(pres.generators.size())), cap_(max_cosets) {
    if (max_cosets < 1) fail("max_cosets must be positive");
    relators_ = pres.relator_letters();
    table_.push_back(std::vector<int>(nl_, -1));
    p_.push_back(0);
  }

  void run() {
    for (size_t alpha = 0; alpha < table_.size(); ++alpha) {
      if (rep(int(alpha)) != int(alpha)) continue;
      for (const auto& w : relators_) {
        scan_and_fill(int(alpha), w);
        if (rep(int(alpha)) != int(alpha)) break;
      }
      if (rep(int(alpha)) != int(alpha)) continue;
      for (int x = 0; x < nl_; ++x)
        if (table_[alpha][x] < 0) define(int(alpha), x);
    }
  }

  GroupTable result() const {
    std::vector<int> live, idx(table_.size(), -1);
    for (int c = 0; c < int(table_.size()); ++c)
      if (p_[c] == c) {
        idx[c] = int(live.size());
        live.push_back(c);
      }
    int n = int(live.size());
    // generator action on compacted cosets
    std::vector<std::vector<int>> act(n, std::vector<int>(nl_, -1));
    for (int i = 0; i < n; ++i)
      for (int x = 0; x < nl_; ++x) {
        int t = table_[live[i]][x];
        if (t < 0) fail("incomplete coset table after enumeration");
        act[i][x] = idx[rep_const(t)];
      }
    // shortest word reaching each coset from the identity coset
    std::vector<int> parent(n, -1), via(n, -1), order;
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    order.push_back(0);
    for (size_t h = 0; h < order.size(); ++h) {
      int c = order[h];
      for (int x = 0; x < nl_; ++x) {
        int d = act[c][x];
        if (!seen[d]) {
          seen[d] = 1;
          parent[d] = c;
          via[d] = x;
          order.push_back(d);
        }
      }
    }
    if (int(order.size()) != n) fail("coset graph is not connected");
    std::vector<std::vector<int>> words(n);
    for (int c : order) {
      if (c == 0) continue;
      words[c] = words[parent[c]];
      words[c].push_back(via[c]);
    }
    std::vector<std::string> labels(n);
    for (int c = 0; c < n; ++c) labels[c] = render_word(words[c]);
    GroupTable g = make_group(n,
                              [&](int i, int j) {
                                int t = i;
                                for (int x : words[j]) t = act[t][x];
                                return t;
                              },
                              std::move(labels));
    return g;
  }

  // element of the result table corresponding to generator gi
  int generator_coset(int gi) const {
    int t = table_[0][2 * gi];
    int r = rep_const(t);
    int k = 0;
    for (int c = 0; c < r; ++c)
      if (p_[c] == c) ++k;
    return k;
  }

 private:
  std::string render_word(const std::vector<int>& w) const {
    if (w.empty()) return "1";
    std::string s;
    size_t i = 0;
    while (i < w.size()) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      int run = int(j - i);
      if (!s.empty()) s += "*";
      s += pres_.generators[w[i] / 2];
      int e = (w[i] & 1) ? -run : run;
      if (e != 1) s += "^" + std::to_string(e);
      i = j;
    }
    return s;
  }

  int rep(int c) {
    int r = c;
    while (p_[r] != r) r = p_[r];
    while (p_[c] != r) {
      int t = p_[c];
      p_[c] = r;
      c = t;
    }
    return r;
  }

  int rep_const(int c) const {
    while (p_[c] != c) c = p_[c];
    return c;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    dead_queue_.push_back(b);
  }

  // Standard coincidence processing; relies on the invariant that the
  // table is inverse-consistent (t[a][x]=b <=> t[b][x^-1]=a).
  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead_queue_.empty()) {
      int g = dead_queue_.front();
      dead_queue_.pop_front();
      for (int x = 0; x < nl_; ++x) {
        int d = table_[g][x];
        if (d < 0) continue;
        table_[g][x] = -1;
        if (table_[d][Presentation::inverse_letter(x)] == g)
          table_[d][Presentation::inverse_letter(x)] = -1;
        int mu = rep(g), nu = rep(d);
        if (table_[mu][x] >= 0)
          merge(nu, table_[mu][x]);
        else if (table_[nu][Presentation::inverse_letter(x)] >= 0)
          merge(mu, table_[nu][Presentation::inverse_letter(x)]);
        else {
          table_[mu][x] = nu;
          table_[nu][Presentation::inverse_letter(x)] = mu;
        }
      }
    }
  }

  int define(int a, int x) {
    if (int(table_.size()) >= cap_)
      throw coset_limit_error("coset limit " + std::to_string(cap_) +
                              " exceeded; the presentation may define a larger or infinite group");
    int c = int(table_.size());
    table_.push_back(std::vector<int>(nl_, -1));
    p_.push_back(c);
    table_[a][x] = c;
    table_[c][Presentation::inverse_letter(x)] = a;
    return c;
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    while (true) {
      int f = alpha;
      size_t i = 0;
      while (i < w.size() && table_[f][w[i]] >= 0) f = table_[f][w[i]], ++i;
      if (i == w.size()) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      int b = alpha;
      size_t j = w.size();
      while (j > i && table_[b][Presentation::inverse_letter(w[j - 1])] >= 0)
        b = table_[b][Presentation::inverse_letter(w[j - 1])], --j;
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][w[i]] = b;
        table_[b][Presentation::inverse_letter(w[i])] = f;
        return;
      }
      define(f, w[i]);  // fill the first gap and rescan
    }
  }

  const Presentation& pres_;
  int nl_;
  int cap_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> p_;
  std::deque<int> dead_queue_;
};

}  // namespace detail

struct CosetResult {
  GroupTable group;
  std::vector<int> generator_elements;  // element index of each presentation generator
};

inline CosetResult todd_coxeter_with_generators(const Presentation& p, int max_cosets) {
  detail::CosetEnumerator e(p, max_cosets);
  e.run();
  CosetResult r{e.result(), {}};
  for (int gi = 0; gi < int(p.generators.size()); ++gi)
    r.generator_elements.push_back(e.generator_coset(gi));
  return r;
}

inline GroupTable todd_coxeter(const Presentation& p, int max_cosets) {
  return todd_coxeter_with_generators(p, max_cosets).group;
}

}  // namespace fgx
