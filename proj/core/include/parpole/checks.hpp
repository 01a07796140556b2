#pragma once

#include <parpole/quotient.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace parpole {

enum class CheckStatus { verified, failed, skipped };

std::string to_string(CheckStatus s);

struct CheckReport {
  std::string check; // one of check_names()
  CartanType type;
  int node = 1;
  CheckStatus status = CheckStatus::verified;
  std::string reason;         // skip reason, empty otherwise
  std::string counterexample; // replayable JSON text, empty unless failed
  std::int64_t millis = 0;    // wall time of the pass that decided this check
  std::map<std::string, std::string> info;
};

// Canonical check order: comb-, comb+, comb1, direct, cdprime, productL,
// symmetry, strip, d0.
const std::vector<std::string>& check_names();

struct RunLimits {
  std::optional<Deadline> deadline;
};

// Runs the selected checks for one (type, node), sharing a single quotient
// enumeration across the edge- and rep-level checks. Reports come back in
// canonical order. Unknown names throw std::invalid_argument.
//
//   comb-    left-drop domination: for every rep w and every cell,
//            max(0, m_w(h,l)-m_w(h-1,l)) <= max(0, m_{w0}(h,l)-m_{w0}(h-1,l));
//            equivalently, the denominator of every c_w divides d cell-wise
//   comb+    at every covering edge w -> s_a w with new coroot at (h, l),
//            the child profile satisfies m_{s_a w}(h,l) >= m_{s_a w}(h+1,l)
//   comb1    classifies every covering edge: direct when the child profile
//            is also weakly increasing into the new cell,
//            m_{s_a w}(h,l) >= m_{s_a w}(h-1,l), fallback otherwise; reports
//            info "i_route_edges" / "ii_dependent_edges" (a partition of
//            "edges") and "qualifying_edges" (edges whose new-coroot left
//            drop increments, a subset of the direct ones)
//   direct   a_{w0} == a_{P|P^op} and d == a_{P|P}
//   cdprime  cancel(mul(d, c_{w0})) == a_{P|P^op}
//   productL is_product_of_L(mul(d, c_w)) for every w, plus key-by-key
//            domination of every c_w denominator by d
//   symmetry m_{w0}(h, l) == m_{w0}(l*kappa - h, l)
//   strip    every pole real part of every d*c_w lies in |x| <= s_k + 1,
//            and every outside coroot has h <= lambda(2 s_k + 1)
//   d0       d0 <= 6 and d0 == node-mark of the highest coroot
std::vector<CheckReport> run_checks(const ParabolicDatum& pd,
                                    const std::set<std::string>& which,
                                    const RunLimits& limits = {});

CheckReport check_comb_minus(const ParabolicDatum& pd);
CheckReport check_comb_plus(const ParabolicDatum& pd);
CheckReport check_comb1(const ParabolicDatum& pd);
CheckReport check_lemma_direct(const ParabolicDatum& pd);
CheckReport check_cd_prime(const ParabolicDatum& pd);
CheckReport check_product_of_L(const ParabolicDatum& pd);
CheckReport check_profile_symmetry(const ParabolicDatum& pd);
CheckReport check_strip(const ParabolicDatum& pd);
CheckReport check_d0(const ParabolicDatum& pd);

} // namespace parpole
