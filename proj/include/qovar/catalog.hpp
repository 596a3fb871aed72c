#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "qovar/symbols.hpp"

namespace qovar {

// The system of fundamental covariants, built by running the tabulated
// recipes in dependency order.  Every stored entry has been degree-checked
// against its symbol and verified nonzero.
class Catalog {
public:
    static Catalog build(int dmax, const std::string& cache_dir = "", int jobs = 0,
                         const std::function<void(int, std::size_t)>& on_layer = {});

    int dmax() const { return dmax_; }
    bool contains(const CovariantSymbol& s) const { return entries_.count(s) != 0; }
    const Poly& at(const CovariantSymbol& s) const;
    const std::map<CovariantSymbol, Poly>& entries() const { return entries_; }
    std::optional<CovariantRecipe> provenance(const CovariantSymbol& s) const;

    // count of generators per (degree, sorted variable type)
    std::map<std::pair<int, std::array<int, 4>>, int> generator_counts() const;
    // diffs generator_counts() against the tabulated expected counts for
    // complete degrees <= dmax; returns mismatch descriptions (empty = ok)
    std::vector<std::string> check_counts() const;

    // named covariant or alias (H, b_xy, ...); throws on unknown names
    Poly resolve(const std::string& name) const;

private:
    int dmax_ = 0;
    std::map<CovariantSymbol, Poly> entries_;
};

// highest-weight coefficient: the polynomial coefficient of
// x1^mu1 y1^mu2 z1^mu3 t1^mu4
Poly source(const Poly& p);

// aliases from the fundamental-set narrative: H = 1/2 B_0000, b_xy = 1/2 B_2200, ...
const std::map<std::string, std::pair<CovariantSymbol, Rational>>& named_aliases();

// cache access for single entries (used by the CLI to avoid full builds)
std::optional<Poly> cache_load_entry(const std::string& cache_dir, const CovariantSymbol& s);

}  // namespace qovar
