#pragma once

/*
 * Tempered census: enumerate the irreducible tempered modules at a
 * fixed positive parameter.  Rank k type A candidates are harvested
 * from principal series at staircase central characters, one partition
 * of k per staircase; the wreath census then induces every combination
 * of per-block type A entries across every block label.  Counts match
 * the product-of-partition-numbers formula, which the tests pin down.
 */

#include "gghlab/langlands.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace gghlab {

/* Partitions of k, parts non-increasing; k = 0 gives the empty partition. */
inline std::vector<std::vector<unsigned>> partitions_of(unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

inline unsigned partition_count(unsigned k) { return unsigned(partitions_of(k).size()); }

/*
 * Irreducible tempered modules of the rank k type A algebra at c > 0.
 * Each partition contributes the staircase central character built from
 * centered arithmetic progressions of step c; the tempered composition
 * factors of the principal series there, deduplicated up to
 * isomorphism, are the census.
 */
inline std::vector<HModule> typeA_tempered_census(unsigned k, const Rat& c, unsigned L = 1) {
    std::vector<HModule> out;
    if (k == 0) {
        out.push_back(module_shell(1, 0, L, c, 1));
        return out;
    }
    for (const auto& p : partitions_of(k)) {
        std::vector<Rat> lambda;
        for (unsigned part : p)
            for (unsigned j = 0; j < part; ++j)
                lambda.push_back(Rat(c * Rat(2 * long(j) + 1 - long(part), 2)));
        HModule ps = typeA_principal_series(k, lambda, c, L);
        for (auto& f : composition_factors(ps)) {
            if (is_tempered(f) != Temperedness::tempered) continue;
            bool duplicate = false;
            for (const auto& seen : out)
                if (seen.dim == f.dim && hom_dimension(seen, f) > 0) duplicate = true;
            if (!duplicate) out.push_back(std::move(f));
        }
    }
    return out;
}

struct CensusEntry {
    std::vector<unsigned> block;
    HModule module;
};

/*
 * Irreducible tempered modules of the wreath product algebra at a
 * positive parameter: for every block label, induce every combination
 * of per-part type A census entries taken at c = m * kappa.  Each
 * candidate is certified irreducible and tempered on the spot; a
 * failure there falsifies the census construction and throws.
 */
inline std::vector<CensusEntry> tempered_census(unsigned m, unsigned n, const Rat& kappa,
                                                unsigned L) {
    const Rat c = Rat(Rat(long(m)) * kappa);
    std::map<unsigned, std::vector<HModule>> pool;
    std::vector<CensusEntry> out;
    for (const auto& a : all_block_labels(m, n)) {
        std::vector<const std::vector<HModule>*> choices;
        for (unsigned part : a) {
            auto it = pool.find(part);
            if (it == pool.end()) it = pool.emplace(part, typeA_tempered_census(part, c, 1)).first;
            choices.push_back(&it->second);
        }
        std::vector<unsigned> pick(a.size(), 0);
        while (true) {
            std::vector<HModule> factors;
            for (unsigned i = 0; i < a.size(); ++i) factors.push_back((*choices[i])[pick[i]]);
            HModule x = parabolic_induce(pullback_from_typeA(factors, a, kappa, L));
            if (!detail::analyze_simplicity(x).simple)
                throw std::logic_error("tempered census: an induced candidate is reducible");
            if (is_tempered(x) != Temperedness::tempered)
                throw std::logic_error("tempered census: an induced candidate is not tempered");
            out.push_back({a, std::move(x)});
            unsigned slot = 0;
            while (slot < a.size() && ++pick[slot] == choices[slot]->size()) {
                pick[slot] = 0;
                ++slot;
            }
            if (slot == a.size()) break;
        }
    }
    return out;
}

/* The count the census must reproduce: sum over block labels of the
 * product of partition numbers of the parts. */
inline unsigned long census_count_formula(unsigned m, unsigned n) {
    unsigned long total = 0;
    for (const auto& a : all_block_labels(m, n)) {
        unsigned long prod = 1;
        for (unsigned part : a) prod *= partition_count(part);
        total += prod;
    }
    return total;
}

} // namespace gghlab
