#include <parpole/cartan.hpp>

#include <algorithm>
#include <stdexcept>

namespace parpole {

bool is_valid(CartanType t) {
  int n = t.rank;
  if (n > kMaxRank) return false;
  switch (t.series) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 2;
    case Series::C: return n >= 2;
    case Series::D: return n >= 3;
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
  }
  return false;
}

std::string to_string(CartanType t) {
  return std::string(1, static_cast<char>(t.series)) + std::to_string(t.rank);
}

CartanType type_from_string(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type: " + s);
  char c = s[0];
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad type: " + s);
  }
  CartanType t{static_cast<Series>(c), rank};
  if (c < 'A' || c > 'G' || !is_valid(t))
    throw std::invalid_argument("bad type: " + s);
  return t;
}

namespace {

// 0-based diagram edges, Bourbaki. For the doubled bonds the pair is
// (i, j, aij, aji) with A[i][j] = aij = <alpha_j, alpha_i^vee>.
struct Bond {
  int i, j, aij, aji;
};

std::vector<Bond> bonds(CartanType t) {
  int n = t.rank;
  std::vector<Bond> out;
  auto simple = [&](int i, int j) { out.push_back({i, j, -1, -1}); };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) simple(i, i + 1);
      break;
    case Series::B: // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 2 < n; ++i) simple(i, i + 1);
      out.push_back({n - 2, n - 1, -1, -2});
      break;
    case Series::C: // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      for (int i = 0; i + 2 < n; ++i) simple(i, i + 1);
      out.push_back({n - 2, n - 1, -2, -1});
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) simple(i, i + 1);
      simple(n - 3, n - 1);
      break;
    case Series::E:
      simple(0, 2);
      simple(1, 3);
      simple(2, 3);
      simple(3, 4);
      simple(4, 5);
      if (n >= 7) simple(5, 6);
      if (n == 8) simple(6, 7);
      break;
    case Series::F: // alpha_1, alpha_2 long: <alpha_2, alpha_3^vee> = -2
      simple(0, 1);
      out.push_back({1, 2, -1, -2});
      simple(2, 3);
      break;
    case Series::G: // alpha_1 short: <alpha_2, alpha_1^vee> = -3
      out.push_back({0, 1, -3, -1});
      break;
  }
  return out;
}

} // namespace

CartanMatrix cartan_matrix(CartanType t) {
  if (!is_valid(t)) throw std::invalid_argument("bad type: " + to_string(t));
  int n = t.rank;
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (const Bond& b : bonds(t)) {
    a[b.i][b.j] = b.aij;
    a[b.j][b.i] = b.aji;
  }
  return a;
}

int edge_count(const CartanMatrix& a, int i, int j) {
  return a[i][j] * a[j][i];
}

std::uint64_t weyl_order(CartanType t) {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  int n = t.rank;
  switch (t.series) {
    case Series::A: return fact(n + 1);
    case Series::B:
    case Series::C: return fact(n) << n;
    case Series::D: return fact(n) << (n - 1);
    case Series::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

std::uint64_t subdiagram_weyl_order(const CartanMatrix& a, const std::vector<int>& nodes) {
  int n = static_cast<int>(a.size());
  std::vector<int> comp(n, -1);
  std::vector<char> in(n, 0);
  for (int v : nodes) in[v] = 1;

  std::uint64_t order = 1;
  for (int start : nodes) {
    if (comp[start] != -1) continue;
    // flood one component
    std::vector<int> cn;
    std::vector<int> stack{start};
    comp[start] = start;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      cn.push_back(v);
      for (int u = 0; u < n; ++u)
        if (in[u] && u != v && a[v][u] != 0 && comp[u] == -1) {
          comp[u] = start;
          stack.push_back(u);
        }
    }

    int k = static_cast<int>(cn.size());
    int max_edge = 0;
    std::vector<int> deg(cn.size(), 0);
    for (std::size_t x = 0; x < cn.size(); ++x)
      for (std::size_t y = x + 1; y < cn.size(); ++y)
        if (a[cn[x]][cn[y]] != 0) {
          max_edge = std::max(max_edge, edge_count(a, cn[x], cn[y]));
          ++deg[x];
          ++deg[y];
        }

    auto fact = [](int m) {
      std::uint64_t f = 1;
      for (int i = 2; i <= m; ++i) f *= i;
      return f;
    };

    if (max_edge == 3) {
      order *= 12; // G2 component
    } else if (max_edge == 2) {
      order *= fact(k) << k; // B/C component
    } else {
      int branches = static_cast<int>(std::count_if(deg.begin(), deg.end(),
                                                    [](int d) { return d >= 3; }));
      if (branches == 0) {
        order *= fact(k + 1); // A_k path
      } else {
        // arm lengths from the unique branch node
        int b = cn[std::find_if(deg.begin(), deg.end(), [](int d) { return d >= 3; }) -
                   deg.begin()];
        std::vector<int> arms;
        for (std::size_t x = 0; x < cn.size(); ++x) {
          if (cn[x] == b || a[b][cn[x]] == 0) continue;
          int len = 1, prev = b, cur = cn[x];
          for (;;) {
            int next = -1;
            for (int u : cn)
              if (u != prev && u != cur && a[cur][u] != 0) next = u;
            if (next == -1) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) {
          order *= fact(k) << (k - 1); // D_k
        } else if (arms == std::vector<int>{1, 2, 2}) {
          order *= 51840;
        } else if (arms == std::vector<int>{1, 2, 3}) {
          order *= 2903040;
        } else if (arms == std::vector<int>{1, 2, 4}) {
          order *= 696729600;
        } else {
          throw std::logic_error("unrecognized simply-laced component");
        }
      }
    }
  }
  return order;
}

std::uint64_t levi_weyl_order(CartanType t, int node) {
  CartanMatrix a = cartan_matrix(t);
  std::vector<int> nodes;
  for (int i = 0; i < t.rank; ++i)
    if (i != node - 1) nodes.push_back(i);
  return subdiagram_weyl_order(a, nodes);
}

} // namespace parpole
