#include "qovar/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qovar {

namespace fs = std::filesystem;

namespace {

struct CacheEntry {
    CovariantSymbol sym;
    Poly poly;
};

std::string degree_file(int d) { return "degree-" + std::to_string(d) + ".cov"; }

// header: SYMBOL d mu1 mu2 mu3 mu4 nterms
std::string header_line(const CovariantSymbol& s, const Poly& p) {
    std::ostringstream os;
    os << s.str() << " " << s.degree();
    for (int m : s.sub) os << " " << m;
    os << " " << p.nterms();
    return os.str();
}

bool parse_header(const std::string& line, CovariantSymbol& sym, std::size_t& nterms) {
    std::istringstream is(line);
    std::string name;
    int d;
    std::array<int, 4> mu;
    if (!(is >> name >> d >> mu[0] >> mu[1] >> mu[2] >> mu[3] >> nterms)) return false;
    sym = CovariantSymbol::parse(name);
    return sym.degree() == d && sym.sub == mu;
}

std::vector<CacheEntry> read_degree_file(const fs::path& path) {
    std::vector<CacheEntry> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CovariantSymbol sym;
        std::size_t nterms = 0;
        if (!parse_header(line, sym, nterms)) throw Error("cache: bad header in " + path.string());
        std::string body;
        if (!std::getline(in, body)) throw Error("cache: truncated entry in " + path.string());
        Poly p = Poly::parse(body);
        if (p.nterms() != nterms) throw Error("cache: term count mismatch for " + sym.str());
        out.push_back({sym, std::move(p)});
    }
    return out;
}

void verify_entry(const CovariantSymbol& sym, const CovariantRecipe* rec, const Poly& p) {
    std::string what = rec ? sym.str() + " = (f," + rec->right.str() + ")^{" +
                                 std::to_string(rec->index[0]) + std::to_string(rec->index[1]) +
                                 std::to_string(rec->index[2]) + std::to_string(rec->index[3]) + "}"
                           : sym.str();
    if (p.is_zero()) throw Error("catalog: recipe " + what + " produced the zero polynomial");
    auto md = p.multidegree();
    if (!md) throw Error("catalog: recipe " + what + " produced an inhomogeneous polynomial");
    if (md->d != sym.degree() || md->mu != sym.sub)
        throw Error("catalog: recipe " + what + " has multidegree (" + std::to_string(md->d) +
                    ";...) not matching its symbol");
}

}  // namespace

Catalog Catalog::build(int dmax, const std::string& cache_dir, int jobs,
                       const std::function<void(int, std::size_t)>& on_layer) {
    if (dmax < 1) throw Error("catalog: dmax must be >= 1");
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif
    Catalog cat;
    cat.dmax_ = dmax;
    cat.entries_[kGroundForm] = ground_form();

    // cached entries first
    std::map<CovariantSymbol, Poly> cached;
    if (!cache_dir.empty() && fs::exists(cache_dir)) {
        for (int d = 2; d <= dmax; ++d) {
            fs::path p = fs::path(cache_dir) / degree_file(d);
            if (!fs::exists(p)) continue;
            for (CacheEntry& e : read_degree_file(p)) cached[e.sym] = std::move(e.poly);
        }
    }

    const auto& table = recipes();
    std::vector<bool> fresh(table.size(), false);
    for (int d = 2; d <= dmax; ++d) {
        std::vector<std::size_t> layer;
        for (std::size_t i = 0; i < table.size(); ++i)
            if (table[i].symbol.degree() == d) layer.push_back(i);
        if (layer.empty()) continue;

        std::vector<Poly> results(layer.size());
        std::exception_ptr fail;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(layer.size()); ++k) {
            try {
                const CovariantRecipe& rec = table[layer[k]];
                auto it = cached.find(rec.symbol);
                if (it != cached.end()) {
                    results[k] = it->second;
                } else {
                    results[k] =
                        transvectant(cat.entries_.at(kGroundForm), cat.entries_.at(rec.right), rec.index);
                    fresh[layer[k]] = true;
                }
                verify_entry(rec.symbol, &table[layer[k]], results[k]);
            } catch (...) {
#pragma omp critical
                fail = std::current_exception();
            }
        }
        if (fail) std::rethrow_exception(fail);
        for (std::size_t k = 0; k < layer.size(); ++k)
            cat.entries_[table[layer[k]].symbol] = std::move(results[k]);
        if (on_layer) {
            std::size_t total = 0;
            for (std::size_t k : layer) total += cat.entries_[table[k].symbol].nterms();
            on_layer(d, total);
        }
    }

    // write back any degree with freshly computed entries
    if (!cache_dir.empty()) {
        fs::create_directories(cache_dir);
        std::map<int, bool> dirty;
        for (std::size_t i = 0; i < table.size(); ++i)
            if (fresh[i]) dirty[table[i].symbol.degree()] = true;
        for (auto [d, _] : dirty) {
            fs::path p = fs::path(cache_dir) / degree_file(d);
            std::ofstream out(p, std::ios::trunc);
            for (const auto& [sym, poly] : cat.entries_) {
                if (sym.degree() != d || sym == kGroundForm) continue;
                out << header_line(sym, poly) << "\n" << poly.str() << "\n";
            }
        }
        // regenerate the offset index over every degree file present
        std::ofstream idx(fs::path(cache_dir) / "index.txt", std::ios::trunc);
        for (int d = 2; d <= 12; ++d) {
            fs::path p = fs::path(cache_dir) / degree_file(d);
            std::ifstream in(p, std::ios::binary);
            if (!in) continue;
            std::string line;
            std::size_t offset = 0;
            while (std::getline(in, line)) {
                std::size_t next = offset + line.size() + 1;
                if (!line.empty()) {
                    CovariantSymbol sym;
                    std::size_t nterms;
                    if (parse_header(line, sym, nterms)) {
                        idx << sym.str() << " " << degree_file(d) << " " << offset << "\n";
                        std::getline(in, line);  // skip body
                        next += line.size() + 1;
                    }
                }
                offset = next;
            }
        }
    }
    return cat;
}

const Poly& Catalog::at(const CovariantSymbol& s) const {
    auto it = entries_.find(s);
    if (it == entries_.end()) throw Error("catalog: unknown symbol " + s.str());
    return it->second;
}

std::optional<CovariantRecipe> Catalog::provenance(const CovariantSymbol& s) const {
    for (const CovariantRecipe& r : recipes())
        if (r.symbol == s) return r;
    return std::nullopt;
}

std::map<std::pair<int, std::array<int, 4>>, int> Catalog::generator_counts() const {
    std::map<std::pair<int, std::array<int, 4>>, int> counts;
    for (const auto& [sym, poly] : entries_) {
        std::array<int, 4> lam = sym.sub;
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        counts[{sym.degree(), lam}]++;
    }
    return counts;
}

std::vector<std::string> Catalog::check_counts() const {
    std::vector<std::string> bad;
    auto got = generator_counts();
    for (const CountRow& row : expected_counts()) {
        std::array<int, 4> lam = row.lambda;
        std::vector<std::array<int, 4>> perms;
        std::array<int, 4> p = lam;
        std::sort(p.begin(), p.end());
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        int nperm = static_cast<int>(perms.size());
        for (int d = 1; d <= dmax_; ++d) {
            int want = row.per_degree[d - 1] * nperm;
            int have = 0;
            auto it = got.find({d, lam});
            if (it != got.end()) have = it->second;
            if (want != have) {
                std::ostringstream os;
                os << "degree " << d << " type " << lam[0] << lam[1] << lam[2] << lam[3] << ": have "
                   << have << ", table says " << want;
                bad.push_back(os.str());
            }
        }
    }
    return bad;
}

Poly Catalog::resolve(const std::string& name) const {
    auto& aliases = named_aliases();
    auto it = aliases.find(name);
    if (it != aliases.end()) return at(it->second.first).scaled(FieldElem(it->second.second));
    return at(CovariantSymbol::parse(name));
}

Poly source(const Poly& p) {
    auto md = p.multidegree();
    if (!md) throw Error("source: inhomogeneous polynomial");
    Monomial vm = Monomial::one();
    for (int s = 0; s < 4; ++s) vm.e[indet::var(s, 0)] = static_cast<std::uint8_t>(md->mu[s]);
    return p.coefficient_extract(vm);
}

const std::map<std::string, std::pair<CovariantSymbol, Rational>>& named_aliases() {
    static const std::map<std::string, std::pair<CovariantSymbol, Rational>> table = {
        {"H", {CovariantSymbol::parse("B_0000"), Rational(1, 2)}},
        {"b_xy", {CovariantSymbol::parse("B_2200"), Rational(1, 2)}},
        {"b_xz", {CovariantSymbol::parse("B_2020"), Rational(1, 2)}},
        {"b_xt", {CovariantSymbol::parse("B_2002"), Rational(1, 2)}},
        {"b_yz", {CovariantSymbol::parse("B_0220"), Rational(1, 2)}},
        {"b_yt", {CovariantSymbol::parse("B_0202"), Rational(1, 2)}},
        {"b_zt", {CovariantSymbol::parse("B_0022"), Rational(1, 2)}},
    };
    return table;
}

std::optional<Poly> cache_load_entry(const std::string& cache_dir, const CovariantSymbol& s) {
    fs::path idx = fs::path(cache_dir) / "index.txt";
    std::ifstream in(idx);
    if (!in) return std::nullopt;
    std::string name, file;
    std::size_t offset;
    while (in >> name >> file >> offset) {
        if (name != s.str()) continue;
        std::ifstream data(fs::path(cache_dir) / file, std::ios::binary);
        if (!data) return std::nullopt;
        data.seekg(static_cast<std::streamoff>(offset));
        std::string header, body;
        if (!std::getline(data, header) || !std::getline(data, body)) return std::nullopt;
        CovariantSymbol sym;
        std::size_t nterms;
        if (!parse_header(header, sym, nterms) || !(sym == s)) return std::nullopt;
        Poly p = Poly::parse(body);
        if (p.nterms() != nterms) throw Error("cache: term count mismatch for " + s.str());
        return p;
    }
    return std::nullopt;
}

}  // namespace qovar
