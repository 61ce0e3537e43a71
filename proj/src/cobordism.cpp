#include "z2cob/cobordism.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>

#include "z2cob/error.hpp"
#include "z2cob/polytopes.hpp"
#include "z2cob/reference_data.hpp"

namespace z2cob {

namespace {

void require_dim3(const CobordismClass& c) {
    if (c.dim() != 3 && !(c.dim() == 0 && c.is_zero()))
        throw Error(ErrorCode::DimensionMismatch, "the class engine works in dimension 3");
}

void inconsistent(const std::string& why) { throw Error(ErrorCode::CatalogInconsistent, why); }

// Echelon basis over 32-bit masks that remembers which inputs formed each row.
struct TrackedBasis {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> combos;

    // Returns true when v was independent of the current rows.
    bool insert(std::uint32_t v, std::uint32_t combo) {
        auto [r, c] = reduce(v, combo);
        if (!r) return false;
        rows.push_back(r);
        combos.push_back(c);
        return true;
    }
    std::pair<std::uint32_t, std::uint32_t> reduce(std::uint32_t v, std::uint32_t combo) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::uint32_t pivot = std::bit_floor(rows[i]);
            if (v & pivot) {
                v ^= rows[i];
                combo ^= combos[i];
            }
        }
        return {v, combo};
    }
};

}  // namespace

CobordismClass add(const CobordismClass& a, const CobordismClass& b) {
    if (a.dim() && b.dim() && a.dim() != b.dim())
        throw Error(ErrorCode::DimensionMismatch, "cannot add classes of different dimensions");
    return CobordismClass(a.prime() ^ b.prime());
}

MonomialIndex::MonomialIndex() : monomials_(enumerate_monomials(3)) {
    for (int i = 0; i < size(); ++i) index_[monomials_[i]] = i;
}

const MonomialIndex& MonomialIndex::instance() {
    static const MonomialIndex idx;
    return idx;
}

int MonomialIndex::index_of(const RepMonomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw Error(ErrorCode::DimensionMismatch, "monomial " + m.to_string() + " is not 3-dimensional");
    return it->second;
}

std::uint32_t MonomialIndex::mask(const PrimeRepSet& s) const {
    std::uint32_t m = 0;
    for (const auto& mono : s.entries()) m |= 1u << index_of(mono);
    return m;
}

PrimeRepSet MonomialIndex::set(std::uint32_t mask) const {
    if (mask >> size()) throw Error(ErrorCode::DimensionMismatch, "class mask has bits beyond 28 monomials");
    PrimeRepSet s(3);
    for (int i = 0; i < size(); ++i)
        if ((mask >> i) & 1u) s.insert(monomials_[i]);
    return s;
}

std::uint32_t class_mask(const CobordismClass& c) {
    require_dim3(c);
    return MonomialIndex::instance().mask(c.prime());
}

CobordismClass class_from_mask(std::uint32_t mask) { return CobordismClass(MonomialIndex::instance().set(mask)); }

std::string class_id(std::uint32_t mask) {
    std::ostringstream out;
    out << "0x" << std::hex << std::setw(7) << std::setfill('0') << mask;
    return out.str();
}

std::string class_id(const CobordismClass& c) { return class_id(class_mask(c)); }

std::optional<std::uint32_t> parse_class_id(std::string_view text) {
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
    if (text.empty() || text.size() > 8) return std::nullopt;
    std::uint32_t v = 0;
    for (char ch : text) {
        int d;
        if (ch >= '0' && ch <= '9')
            d = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            d = ch - 'A' + 10;
        else
            return std::nullopt;
        v = (v << 4) | static_cast<std::uint32_t>(d);
    }
    if (v >> 28) return std::nullopt;
    return v;
}

std::vector<const LabeledClass*> GeneratorCatalog::generators() const {
    std::vector<const LabeledClass*> out;
    for (const auto& c : rp_classes) out.push_back(&c);
    for (const auto& c : prism_classes) out.push_back(&c);
    return out;
}

const LabeledClass* GeneratorCatalog::find(std::string_view label) const {
    for (const auto* c : generators())
        if (c->label == label) return c;
    return nullptr;
}

const LabeledClass* GeneratorCatalog::find(std::uint32_t mask) const {
    for (const auto* c : generators())
        if (c->mask == mask) return c;
    return nullptr;
}

GeneratorCatalog build_catalog() {
    const auto& idx = MonomialIndex::instance();
    GeneratorCatalog cat;

    const auto rp_orbit = orbit(rp_standard_set(3));
    if (rp_orbit.size() != 7) inconsistent("expected 7 rp classes, found " + std::to_string(rp_orbit.size()));
    std::vector<bool> used(rp_orbit.size(), false);
    for (int i = 0; i < 7; ++i) {
        PrimeRepSet row = parse_prime_set(reference::kTableI[i], 3);
        auto it = std::find(rp_orbit.begin(), rp_orbit.end(), row);
        if (it == rp_orbit.end() || used[it - rp_orbit.begin()])
            inconsistent("printed row T" + std::to_string(i) + " is not a distinct rp orbit element");
        used[it - rp_orbit.begin()] = true;
        cat.rp_classes.push_back({"T" + std::to_string(i), CobordismClass(row), idx.mask(row)});
    }
    for (const auto& c : cat.rp_classes)
        if (c.cls.card() != 4) inconsistent(c.label + " does not have 4 monomials");

    const PrimeRepSet lambda1_set = prime_set(SmallCover(builtin(Builtin::Prism3), prism_lambda(1)));
    const auto prism_orbit = orbit(lambda1_set);
    if (prism_orbit.size() != 42) inconsistent("expected 42 prism classes, found " + std::to_string(prism_orbit.size()));
    for (std::size_t j = 0; j < prism_orbit.size(); ++j) {
        if (prism_orbit[j].size() != 6) inconsistent("prism class without 6 monomials");
        cat.prism_classes.push_back({"P" + std::to_string(j), CobordismClass(prism_orbit[j]), idx.mask(prism_orbit[j])});
    }

    const int P = static_cast<int>(cat.prism_classes.size());
    cat.prism_partner.assign(P, -1);
    cat.prism_pair_rp.assign(P, -1);
    for (int j = 0; j < P; ++j) {
        const std::uint32_t pm = cat.prism_classes[j].mask;
        for (int i = 0; i < 7; ++i) {
            if (std::popcount(pm & cat.rp_classes[i].mask) != 2) continue;
            if (cat.prism_pair_rp[j] >= 0) inconsistent(cat.prism_classes[j].label + " meets two rp classes in 2 monomials");
            cat.prism_pair_rp[j] = i;
            const std::uint32_t partner = pm ^ cat.rp_classes[i].mask;
            for (int k = 0; k < P; ++k)
                if (cat.prism_classes[k].mask == partner) cat.prism_partner[j] = k;
        }
        if (cat.prism_partner[j] < 0) inconsistent(cat.prism_classes[j].label + " has no partner");
    }
    for (int j = 0; j < P; ++j) {
        if (cat.prism_partner[cat.prism_partner[j]] != j) inconsistent("prism pairing is not an involution");
        if (j < cat.prism_partner[j]) cat.selected_half.push_back(j);
    }
    if (cat.selected_half.size() != 21) inconsistent("expected 21 prism pairs");

    TrackedBasis basis;
    auto consider = [&](const LabeledClass& c) {
        if (basis.insert(c.mask, 0)) cat.basis13.push_back(c);
    };
    for (const auto& c : cat.rp_classes) consider(c);
    for (int j : cat.selected_half) consider(cat.prism_classes[j]);
    if (cat.basis13.size() != 13) inconsistent("generator span has dimension " + std::to_string(cat.basis13.size()));
    return cat;
}

const GeneratorCatalog& catalog() {
    static const GeneratorCatalog cat = build_catalog();
    return cat;
}

RectBitMatrix relation_matrix(const GeneratorCatalog& cat) {
    const auto& idx = MonomialIndex::instance();
    std::vector<std::uint32_t> columns;
    for (const auto& c : cat.rp_classes) columns.push_back(c.mask);
    for (int j : cat.selected_half) columns.push_back(cat.prism_classes[j].mask);
    RectBitMatrix a(idx.size(), static_cast<int>(columns.size()));
    for (int r = 0; r < idx.size(); ++r)
        for (int c = 0; c < static_cast<int>(columns.size()); ++c) a.set(r, c, (columns[c] >> r) & 1u);
    return a;
}

std::string matrix_text(const RectBitMatrix& m) { return m.to_string(); }

std::vector<std::uint32_t> enumerate_group_masks(const GeneratorCatalog& cat) {
    const std::size_t k = cat.basis13.size();
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint32_t coeff = 0; coeff < (1u << k); ++coeff) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < k; ++i)
            if ((coeff >> i) & 1u) m ^= cat.basis13[i].mask;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CobordismClass> enumerate_group(const GeneratorCatalog& cat) {
    std::vector<CobordismClass> out;
    for (auto m : enumerate_group_masks(cat)) out.push_back(class_from_mask(m));
    return out;
}

std::uint32_t decompose_mask(std::uint32_t mask, const GeneratorCatalog& cat) {
    TrackedBasis basis;
    for (std::size_t i = 0; i < cat.basis13.size(); ++i) basis.insert(cat.basis13[i].mask, 1u << i);
    auto [rest, combo] = basis.reduce(mask, 0);
    if (rest) throw Error(ErrorCode::NotInSpan, "class " + class_id(mask) + " is not in the span of the generators");
    return combo;
}

std::uint32_t decompose(const CobordismClass& beta, const GeneratorCatalog& cat) {
    return decompose_mask(class_mask(beta), cat);
}

CobordismClass fold(std::uint32_t coefficients, const GeneratorCatalog& cat) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < cat.basis13.size(); ++i)
        if ((coefficients >> i) & 1u) m ^= cat.basis13[i].mask;
    return class_from_mask(m);
}

bool is_essential(std::uint32_t beta, const std::vector<std::uint32_t>& universe) {
    if (beta == 0) throw Error(ErrorCode::ZeroClass, "the zero class is never an essential generator");
    const int b = std::popcount(beta);
    for (auto g : universe)
        if (std::popcount(g) < b && std::popcount(beta ^ g) < b) return false;
    return true;
}

bool is_essential(const CobordismClass& beta, const std::vector<std::uint32_t>& universe) {
    return is_essential(class_mask(beta), universe);
}

std::vector<std::uint32_t> essential_set(const std::vector<std::uint32_t>& universe) {
    std::vector<std::uint32_t> out;
    for (auto m : universe)
        if (m && is_essential(m, universe)) out.push_back(m);
    return out;
}

SixCorrespondence six_correspondence(int rp_index, const GeneratorCatalog& cat) {
    if (rp_index < 0 || rp_index >= static_cast<int>(cat.rp_classes.size()))
        throw Error(ErrorCode::DimensionMismatch, "rp index out of range");
    const std::uint32_t t = cat.rp_classes[rp_index].mask;
    SixCorrespondence out;
    for (int j = 0; j < static_cast<int>(cat.prism_classes.size()); ++j)
        if (std::popcount(cat.prism_classes[j].mask & t) == 2) out.prism.push_back(j);
    for (std::size_t a = 0; a < out.prism.size(); ++a)
        for (std::size_t b = a + 1; b < out.prism.size(); ++b)
            if ((cat.prism_classes[out.prism[a]].mask ^ cat.prism_classes[out.prism[b]].mask ^ t) == 0)
                out.pairs.emplace_back(out.prism[a], out.prism[b]);
    return out;
}

std::map<int, int> cardinality_spectrum(const std::vector<std::uint32_t>& universe) {
    std::map<int, int> spectrum;
    for (auto m : universe) ++spectrum[std::popcount(m)];
    return spectrum;
}

std::string class_line(const CobordismClass& c) {
    return "class " + class_id(c) + " card=" + std::to_string(c.card()) + " " + c.prime().to_string();
}

TableOneCheck check_table_one(const GeneratorCatalog& cat) {
    TableOneCheck out;
    const auto rp_orbit = orbit(rp_standard_set(3));
    for (int i = 0; i < static_cast<int>(reference::kTableI.size()); ++i) {
        PrimeRepSet row = parse_prime_set(reference::kTableI[i], 3);
        bool in_orbit = std::find(rp_orbit.begin(), rp_orbit.end(), row) != rp_orbit.end();
        bool labeled = i < static_cast<int>(cat.rp_classes.size()) && cat.rp_classes[i].cls.prime() == row;
        if (in_orbit && labeled)
            ++out.matched;
        else
            out.problems.push_back("T" + std::to_string(i) + " does not match the derived orbit");
    }
    return out;
}

std::optional<PrimeRepSet> parse_printed_set(std::string_view text, bool repair, bool* repaired) {
    if (repaired) *repaired = false;
    try {
        return parse_prime_set(text, 3);
    } catch (const Error&) {
        if (!repair) return std::nullopt;
    }
    std::string fixed;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') {
            if (depth == 0) continue;
            --depth;
        }
        fixed.push_back(ch);
    }
    try {
        PrimeRepSet s = parse_prime_set(fixed, 3);
        if (repaired) *repaired = true;
        return s;
    } catch (const Error&) {
        return std::nullopt;
    }
}

int TableTwoDiff::in_orbit() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](const TableTwoEntry& e) { return e.prism_index.has_value(); }));
}

int TableTwoDiff::mismatches() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const TableTwoEntry& e) {
        return e.status != "selected" && e.status != "partner";
    }));
}

TableTwoDiff diff_table_two(const GeneratorCatalog& cat) {
    const auto& idx = MonomialIndex::instance();
    TableTwoDiff diff;
    std::vector<std::optional<std::uint32_t>> masks;
    for (int r = 0; r < static_cast<int>(reference::kTableII.size()); ++r) {
        TableTwoEntry e{r, "", "", std::nullopt};
        bool repaired = false;
        auto set = parse_printed_set(reference::kTableII[r], true, &repaired);
        if (!set) {
            e.status = "unparseable";
            e.detail = "printed entry cannot be read as a set of monomials";
            masks.push_back(std::nullopt);
            diff.entries.push_back(e);
            continue;
        }
        const std::uint32_t m = idx.mask(*set);
        masks.push_back(m);
        for (int j = 0; j < static_cast<int>(cat.prism_classes.size()); ++j)
            if (cat.prism_classes[j].mask == m) e.prism_index = j;
        std::string prefix = repaired ? "repaired+" : "";
        if (!e.prism_index) {
            e.status = prefix + "not in orbit";
            e.detail = set->to_string();
        } else {
            bool selected = std::find(cat.selected_half.begin(), cat.selected_half.end(), *e.prism_index) !=
                            cat.selected_half.end();
            e.status = prefix + (selected ? "selected" : "partner");
            e.detail = "matches " + cat.prism_classes[*e.prism_index].label;
            if (repaired) e.detail += " after dropping an unmatched ')'";
        }
        diff.entries.push_back(e);
    }
    for (std::size_t a = 0; a < masks.size(); ++a)
        for (std::size_t b = a + 1; b < masks.size(); ++b) {
            if (!masks[a] || !masks[b]) continue;
            for (const auto& t : cat.rp_classes)
                if ((*masks[a] ^ *masks[b]) == t.mask)
                    diff.pair_conflicts.push_back("Phi" + std::to_string(a) + " + Phi" + std::to_string(b) + " = " +
                                                  t.label);
        }
    return diff;
}

}  // namespace z2cob
