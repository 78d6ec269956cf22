#ifndef EXGRAPH_SCENARIOS_HPP
#define EXGRAPH_SCENARIOS_HPP

#include <array>
#include <bitset>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exgraph/cliques.hpp"
#include "exgraph/events.hpp"

namespace exgraph {

/// A family of simultaneously run experiments plus the cross-experiment
/// exclusivity rules coupling them.
struct ExperimentFamily {
    std::vector<Scenario> parts;
    std::vector<ExclusivityRule> rules;
};

// ---------------------------------------------------------------------------
// n-cycle inequalities (CHSH n=4, KCBS n=5, and the unified family)
// ---------------------------------------------------------------------------

/// 2n events ab|i,i+1 over dichotomic measurements 1..n (indices mod n).
/// Contexts i != j require outcome parity a+b = 0 and context j parity 1;
/// `complementary` swaps the two parity patterns. Graph numbers do not
/// depend on j.
inline Scenario gen_ncycle(int n, int j = -1, bool complementary = false) {
    if (n < 3) throw std::invalid_argument("n-cycle needs n >= 3");
    if (j == -1) j = n;
    if (j < 1 || j > n) throw std::invalid_argument("flipped context j out of 1..n");
    Scenario s;
    for (int i = 1; i <= n; ++i) s.measurements.push_back({std::to_string(i), 2});
    for (int i = 1; i <= n; ++i) {
        int next = i % n + 1;
        int parity = (i == j) ? 1 : 0;
        if (complementary) parity ^= 1;
        for (int a = 0; a <= 1; ++a) {
            Event e;
            int b = a ^ parity;
            e.assignment[std::to_string(i)] = a;
            e.assignment[std::to_string(next)] = b;
            e.label = std::to_string(a) + std::to_string(b) + "|" + std::to_string(i) + "," +
                      std::to_string(next);
            s.events.push_back(std::move(e));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Two-party 2m-cycle Bell experiments chained into loops, stars and chains
// ---------------------------------------------------------------------------

namespace detail {

inline std::string party_name(int i) {
    std::string name;
    name += static_cast<char>('A' + i % 26);
    if (i >= 26) name += std::to_string(i / 26);
    return name;
}

inline std::string obs_id(int t, const std::string& party) {
    return std::to_string(t) + "_" + party;
}

/// One 2m-cycle Bell experiment between parties X and Y. Context 2t pairs
/// t_X with t_Y; context 2t+1 pairs t_Y with (t+1)_X. The context `flip`
/// carries outcome parity 1, every other context parity 0.
inline Scenario bell_cycle_experiment(const std::string& x, const std::string& y, int m,
                                      int flip) {
    Scenario s;
    for (int t = 0; t < m; ++t) {
        s.measurements.push_back({obs_id(t, x), 2});
        s.measurements.push_back({obs_id(t, y), 2});
    }
    for (int c = 0; c < 2 * m; ++c) {
        int t = c / 2;
        std::string first = (c % 2 == 0) ? obs_id(t, x) : obs_id(t, y);
        std::string second = (c % 2 == 0) ? obs_id(t, y) : obs_id((t + 1) % m, x);
        int parity = (c == flip) ? 1 : 0;
        for (int a = 0; a <= 1; ++a) {
            Event e;
            int b = a ^ parity;
            e.assignment[first] = a;
            e.assignment[second] = b;
            e.label = std::to_string(a) + std::to_string(b) + "|" + first + second;
            s.events.push_back(std::move(e));
        }
    }
    return s;
}

inline void append_xor_rules(std::vector<ExclusivityRule>& rules, const std::string& p,
                             const std::string& q, int m) {
    for (int t = 0; t < m; ++t)
        for (int a = 0; a <= 1; ++a)
            rules.push_back({{obs_id(t, p), a}, {obs_id(t, q), a}});
}

}  // namespace detail

/// Ring of n parties, each adjacent pair running a 2m-cycle experiment.
/// Adjacent experiments share a party's observables; same-index observables
/// of non-adjacent parties are coupled as xor pairs (equal outcomes are
/// exclusive). The parity flip walks across the shared contexts, which is
/// what packs the shared-context event groups into cliques.
inline ExperimentFamily gen_bell_loop(int n_parties, int m_settings,
                                      std::vector<int> flips = {}) {
    if (n_parties < 3) throw std::invalid_argument("loop needs >= 3 parties");
    if (m_settings < 2) throw std::invalid_argument("loop needs >= 2 settings");
    if (flips.empty()) {
        for (int i = 0; i < n_parties; ++i) flips.push_back(2 * (i % m_settings));
    }
    if (static_cast<int>(flips.size()) != n_parties)
        throw std::invalid_argument("one flip per experiment required");
    ExperimentFamily fam;
    for (int i = 0; i < n_parties; ++i) {
        fam.parts.push_back(detail::bell_cycle_experiment(
            detail::party_name(i), detail::party_name((i + 1) % n_parties), m_settings,
            flips[i]));
    }
    for (int i = 0; i < n_parties; ++i)
        for (int j = i + 1; j < n_parties; ++j) {
            int dist = std::min(j - i, n_parties - (j - i));
            if (dist >= 2)
                detail::append_xor_rules(fam.rules, detail::party_name(i),
                                         detail::party_name(j), m_settings);
        }
    return fam;
}

/// One Alice running 2m-cycle experiments with n Bobs; same-index Bob
/// observables are xor pairs.
inline ExperimentFamily gen_star(int n_bobs, int m_settings) {
    if (n_bobs < 2) throw std::invalid_argument("star needs >= 2 bobs");
    if (m_settings < 2) throw std::invalid_argument("star needs >= 2 settings");
    ExperimentFamily fam;
    std::vector<std::string> bobs;
    for (int j = 0; j < n_bobs; ++j) bobs.push_back("B" + std::to_string(j + 1));
    for (int j = 0; j < n_bobs; ++j)
        fam.parts.push_back(
            detail::bell_cycle_experiment("A", bobs[j], m_settings, 2 * m_settings - 1));
    for (int i = 0; i < n_bobs; ++i)
        for (int j = i + 1; j < n_bobs; ++j)
            detail::append_xor_rules(fam.rules, bobs[i], bobs[j], m_settings);
    return fam;
}

/// Path of parties A1-...-An with experiments on consecutive pairs and xor
/// pairs between same-index observables of non-adjacent parties.
inline ExperimentFamily gen_chain(int n_parties, int m_settings) {
    if (n_parties < 3) throw std::invalid_argument("chain needs >= 3 parties");
    if (m_settings < 2) throw std::invalid_argument("chain needs >= 2 settings");
    ExperimentFamily fam;
    std::vector<std::string> names;
    for (int i = 0; i < n_parties; ++i) names.push_back("A" + std::to_string(i + 1));
    for (int i = 0; i + 1 < n_parties; ++i)
        fam.parts.push_back(
            detail::bell_cycle_experiment(names[i], names[i + 1], m_settings,
                                          2 * m_settings - 1));
    for (int i = 0; i < n_parties; ++i)
        for (int j = i + 2; j < n_parties; ++j)
            detail::append_xor_rules(fam.rules, names[i], names[j], m_settings);
    return fam;
}

// ---------------------------------------------------------------------------
// KCBS pentagon pair
// ---------------------------------------------------------------------------

namespace detail {

inline Scenario kcbs_pentagon(bool primed) {
    Scenario s;
    auto id = [&](int i) { return std::to_string(i) + (primed ? "'" : ""); };
    for (int i = 1; i <= 5; ++i) s.measurements.push_back({id(i), 2});
    for (int i = 1; i <= 5; ++i) {
        int next = i % 5 + 1;
        Event e;
        e.assignment[id(i)] = 0;
        e.assignment[id(next)] = 1;
        e.label = "01|" + id(i) + id(next);
        s.events.push_back(std::move(e));
    }
    return s;
}

}  // namespace detail

/// The two five-event pentagon experiments over measurements 1..5 and
/// 1'..5', with the triples {1,1',2'} and {4,5,5'} declared exclusive on
/// outcome 0 (encoded as the three pairwise rules of each triple).
inline ExperimentFamily gen_kcbs_pair() {
    ExperimentFamily fam;
    fam.parts.push_back(detail::kcbs_pentagon(false));
    fam.parts.push_back(detail::kcbs_pentagon(true));
    auto triple = [&](const std::string& a, const std::string& b, const std::string& c) {
        fam.rules.push_back({{a, 0}, {b, 0}});
        fam.rules.push_back({{a, 0}, {c, 0}});
        fam.rules.push_back({{b, 0}, {c, 0}});
    };
    triple("1", "1'", "2'");
    triple("4", "5", "5'");
    return fam;
}

// ---------------------------------------------------------------------------
// Svetlichny genuine-nonlocality experiments
// ---------------------------------------------------------------------------

/// Expansion of the n-party Svetlichny polynomial: one (settings, sign) term
/// per measurement setting, generated by the recursion from the 4-term
/// two-party base. `settings` is one character per party, '0' or '1'.
struct SvetlichnyPolynomial {
    int parties = 0;
    std::vector<std::pair<std::string, int>> terms;
};

inline SvetlichnyPolynomial svetlichny_polynomial(int n) {
    if (n < 2) throw std::invalid_argument("Svetlichny needs >= 2 parties");
    SvetlichnyPolynomial p;
    p.parties = 2;
    p.terms = {{"00", 1}, {"01", 1}, {"10", 1}, {"11", -1}};
    auto conjugate = [](std::string s) {
        for (char& c : s) c = (c == '0') ? '1' : '0';
        return s;
    };
    for (int k = 3; k <= n; ++k) {
        std::vector<std::pair<std::string, int>> next;
        for (const auto& [s, sign] : p.terms) next.emplace_back(s + "1", sign);
        for (const auto& [s, sign] : p.terms) next.emplace_back(conjugate(s) + "0", sign);
        p.terms = std::move(next);
        p.parties = k;
    }
    return p;
}

namespace detail {

/// Events of one n-party Svetlichny experiment with the given parity rule
/// per setting (parity 0 events for '+' settings, parity 1 for '-').
inline Scenario svetlichny_scenario(const std::vector<std::string>& parties,
                                    const std::map<std::string, int>& parity_of_setting) {
    const int n = static_cast<int>(parties.size());
    Scenario s;
    for (const auto& p : parties) {
        s.measurements.push_back({obs_id(0, p), 2});
        s.measurements.push_back({obs_id(1, p), 2});
    }
    for (int setting = 0; setting < (1 << n); ++setting) {
        std::string sstr;
        for (int k = 0; k < n; ++k) sstr += (setting >> (n - 1 - k) & 1) ? '1' : '0';
        int want = parity_of_setting.at(sstr);
        for (int out = 0; out < (1 << n); ++out) {
            int parity = __builtin_popcount(out) & 1;
            if (parity != want) continue;
            Event e;
            std::string ostr;
            for (int k = 0; k < n; ++k) {
                int a = out >> (n - 1 - k) & 1;
                ostr += static_cast<char>('0' + a);
                e.assignment[obs_id(sstr[k] - '0', parties[k])] = a;
            }
            e.label = ostr + "|" + sstr;
            s.events.push_back(std::move(e));
        }
    }
    return s;
}

}  // namespace detail

struct SvetlichnyExperiment {
    SvetlichnyPolynomial polynomial;
    Scenario scenario;
};

/// n-party Svetlichny experiment over parties A, B, C, ... with one event
/// per (setting, parity-matching outcome) pair.
inline SvetlichnyExperiment gen_svetlichny(int n) {
    SvetlichnyExperiment ex;
    ex.polynomial = svetlichny_polynomial(n);
    std::vector<std::string> parties;
    for (int k = 0; k < n; ++k) parties.push_back(detail::party_name(k));
    std::map<std::string, int> parity;
    for (const auto& [s, sign] : ex.polynomial.terms) parity[s] = sign > 0 ? 0 : 1;
    ex.scenario = detail::svetlichny_scenario(parties, parity);
    return ex;
}

/// The three overlapping four-party experiments (ABCD, CDEF, EFAB) and their
/// composition certificate: per aligned setting row, rows with an odd number
/// of parity-1 settings split into two 12-cliques, the rest into three
/// 8-cliques. Also carries a deterministic global outcome assignment whose
/// matched events form an independent set meeting every classical bound,
/// which certifies the packing value from below.
struct SvetlichnyTriple {
    ExperimentFamily family;
    std::vector<std::vector<std::string>> cover_cliques;  // union event labels
    std::vector<std::string> feasible_events;             // union event labels
};

namespace detail {

struct TripleRow {
    std::array<const char*, 3> setting;
    std::array<int, 3> parity;  // 0 for '+', 1 for '-'
};

/// Aligned settings and parities of the three experiments, one row per
/// simultaneously packed setting triple.
inline const std::array<TripleRow, 16>& svetlichny_triple_rows() {
    static const std::array<TripleRow, 16> rows = {{
        {{"1111", "1111", "1111"}, {1, 1, 0}},
        {{"1100", "0010", "1011"}, {0, 0, 1}},
        {{"1101", "0101", "0111"}, {0, 0, 1}},
        {{"1110", "1000", "0011"}, {1, 1, 1}},
        {{"0000", "0000", "0000"}, {1, 1, 0}},
        {{"0001", "0111", "1100"}, {1, 1, 1}},
        {{"0010", "1010", "1000"}, {0, 0, 1}},
        {{"0011", "1101", "0100"}, {0, 0, 1}},
        {{"0111", "1110", "1001"}, {0, 0, 1}},
        {{"0100", "0001", "0101"}, {0, 0, 1}},
        {{"0101", "0100", "0001"}, {0, 0, 0}},
        {{"0110", "1011", "1101"}, {0, 0, 1}},
        {{"1011", "1100", "0010"}, {0, 0, 1}},
        {{"1000", "0011", "1110"}, {0, 0, 0}},
        {{"1010", "1001", "0110"}, {0, 0, 1}},
        {{"1001", "0110", "1010"}, {0, 0, 1}},
    }};
    return rows;
}

}  // namespace detail

inline SvetlichnyTriple gen_svetlichny_triple() {
    SvetlichnyTriple out;
    const auto& rows = detail::svetlichny_triple_rows();
    const std::array<std::vector<std::string>, 3> parties = {
        std::vector<std::string>{"A", "B", "C", "D"},
        std::vector<std::string>{"C", "D", "E", "F"},
        std::vector<std::string>{"E", "F", "A", "B"}};

    std::array<std::map<std::string, int>, 3> parity;
    for (const auto& row : rows)
        for (int c = 0; c < 3; ++c) parity[c][row.setting[c]] = row.parity[c];
    for (int c = 0; c < 3; ++c)
        out.family.parts.push_back(detail::svetlichny_scenario(parties[c], parity[c]));

    // event label helper: union labels are "<part>:<outcomes>|<setting>"
    auto label = [](int part, const std::string& outs, const std::string& setting) {
        return std::to_string(part) + ":" + outs + "|" + setting;
    };
    auto quad = [&](int part, const std::string& setting, int want_parity, int lead_xor,
                    std::vector<std::string>& into) {
        for (int outv = 0; outv < 16; ++outv) {
            if ((__builtin_popcount(outv) & 1) != want_parity) continue;
            int lead = (outv >> 3 & 1) ^ (outv >> 2 & 1);  // xor of first two outcomes
            if (lead != lead_xor) continue;
            std::string outs;
            for (int k = 3; k >= 0; --k) outs += static_cast<char>('0' + (outv >> k & 1));
            into.push_back(label(part, outs, setting));
        }
    };

    for (const auto& row : rows) {
        int odd = row.parity[0] ^ row.parity[1] ^ row.parity[2];
        if (odd) {
            // two K12: quads chained so each shared party pair differs in its
            // outcome xor, which makes every cross pair exclusive
            for (int t1 = 0; t1 <= 1; ++t1) {
                std::vector<std::string> clique;
                int v1 = row.parity[0] ^ t1;   // exp1 CD-xor
                int v2 = 1 ^ v1;               // exp2 CD-xor (its leading pair)
                int w2 = row.parity[1] ^ v2;   // exp2 EF-xor
                int w3 = 1 ^ w2;               // exp3 EF-xor (its leading pair)
                quad(0, row.setting[0], row.parity[0], t1, clique);
                quad(1, row.setting[1], row.parity[1], v2, clique);
                quad(2, row.setting[2], row.parity[2], w3, clique);
                out.cover_cliques.push_back(std::move(clique));
            }
        } else {
            // three K8: all events of one setting are pairwise exclusive
            for (int c = 0; c < 3; ++c) {
                std::vector<std::string> clique;
                quad(c, row.setting[c], row.parity[c], 0, clique);
                quad(c, row.setting[c], row.parity[c], 1, clique);
                out.cover_cliques.push_back(std::move(clique));
            }
        }
    }

    // deterministic global strategy matching all 3 x 12 classical optima;
    // equal outcomes on shared observables can never be exclusive, so the
    // matched events form an independent set of the union graph
    const std::array<std::string, 6> all_parties = {"A", "B", "C", "D", "E", "F"};
    for (int lambda = 0; lambda < (1 << 12); ++lambda) {
        auto outcome = [&](int party, int obs) { return lambda >> (party * 2 + obs) & 1; };
        std::vector<std::string> chosen;
        bool good = true;
        for (int c = 0; c < 3 && good; ++c) {
            int matched = 0;
            std::vector<std::string> local;
            for (const auto& row : rows) {
                const std::string& setting = row.setting[c];
                int par = 0;
                std::string outs;
                for (int k = 0; k < 4; ++k) {
                    int pidx = static_cast<int>(parties[c][k][0] - 'A');
                    int a = outcome(pidx, setting[k] - '0');
                    par ^= a;
                    outs += static_cast<char>('0' + a);
                }
                if (par == row.parity[c]) {
                    ++matched;
                    local.push_back(label(c, outs, setting));
                }
            }
            if (matched != 12) good = false;
            else chosen.insert(chosen.end(), local.begin(), local.end());
        }
        if (good) {
            out.feasible_events = std::move(chosen);
            break;
        }
    }
    return out;
}

}  // namespace exgraph

#endif
