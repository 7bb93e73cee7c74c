#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "dessin/partitions.hpp"
#include "dessin/vpoly.hpp"

namespace dessin {

// Exact character table of S_d: chi[la][mu] = chi^la(C_mu), rows and columns
// both indexed by partitions_of(d) order.
struct CharTable {
    int d = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<Int>> chi;

    int index_of(const Partition& p) const;
    const Int& value(const Partition& la, const Partition& mu) const;
};

// On-disk store of character tables, one line-delimited JSON file per degree.
// Format: header {"format":1,"d":d}, then one record
// {"lambda":"...","mu":"...","chi":"<integer as string>"} per pair in table
// order. Integers are serialized as strings. A file with a mismatched format
// version or any structural defect is recomputed and overwritten.
class CharCache {
public:
    explicit CharCache(std::filesystem::path dir);
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file_for(int d) const;
    bool load(int d, CharTable& out) const;
    void store(const CharTable& table) const;

private:
    std::filesystem::path dir_;
};

// Character value via the Murnaghan-Nakayama border-strip recursion.
Int mn_character(const Partition& la, const Partition& mu);

// Full table for degree d, loaded from cache when present and valid.
CharTable char_table(int d, const CharCache* cache = nullptr, int jobs = 0);

// s_mu = sum_la chi^mu(C_la)/z_la * p_la
std::map<Partition, Rational> schur_to_powersum(const Partition& mu, const CharTable& table);

// s_mu(t_k = v/k) = prod_box (v + c(box)) / h(box), as a univariate VPoly.
VPoly hook_content_eval(const Partition& mu);

// prod_box prod_{i=1..r} (v_i + c(box)), arity r.
VPoly hook_content_product(const Partition& mu, int r);

// s_eta(delta_{k,1}) = 1 / prod of hook lengths.
Rational principal_eval(const Partition& eta);

}  // namespace dessin
