#include "k3audit/catalogue.hpp"
#include "k3audit/invariants.hpp"
#include "k3audit/poly_io.hpp"
#include "k3audit/scalar_parser.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <fstream>
#include <sstream>

namespace k3 {

std::string CharacterSpec::str() const {
    switch (kind) {
        case Trivial: return "trivial";
        case AnyCharacter: return "semi";
        case OfOrder: return "order " + std::to_string(order);
    }
    return "?";
}

std::string catalogue_directory() {
    if (const char* env = std::getenv("K3AUDIT_DATA")) return env;
#ifdef K3AUDIT_DEFAULT_DATA
    return K3AUDIT_DEFAULT_DATA;
#else
    return "data";
#endif
}

std::vector<std::string> catalogue_names() {
    return {"l27", "valentiner", "s5_perm5", "s4_p2", "m9", "n72",
            "t48_p2", "t48_2d", "q8_2d", "t192_check", "h192_check"};
}

namespace {

std::vector<std::string> split_entries(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : line) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void verify_entry(CatalogueEntry& e, const std::string& dir) {
    e.group = FiniteMatrixGroup::closure(e.generators);
    if (e.group.order() != e.expected_order)
        throw error("catalogue " + e.name + ": closure order " +
                    std::to_string(e.group.order()) + " != expected " +
                    std::to_string(e.expected_order));
    e.projective = e.group.projectivize();
    if (e.projective.order() != e.expected_proj_order)
        throw error("catalogue " + e.name + ": projective order " +
                    std::to_string(e.projective.order()) + " != expected " +
                    std::to_string(e.expected_proj_order));
    for (auto& cert : e.certificates) {
        cert.poly = load_poly_file(dir + "/" + cert.poly_file).poly;
        auto chi = curve_character(cert.poly, e.group);
        if (!chi)
            throw error("catalogue " + e.name + ": certificate " +
                        cert.poly_file + " is not semi-invariant");
        switch (cert.expected.kind) {
            case CharacterSpec::Trivial:
                if (!chi->is_trivial())
                    throw error("catalogue " + e.name + ": certificate " +
                                cert.poly_file + " expected trivial character");
                break;
            case CharacterSpec::AnyCharacter:
                break;
            case CharacterSpec::OfOrder: {
                int ord = 1;
                for (const auto& v : chi->values) {
                    int o = 1;
                    Cyclo p = v;
                    while (!(p == Cyclo(Rational(1)))) {
                        p = p * v;
                        if (++o > 1000)
                            throw error("catalogue: character order diverges");
                    }
                    ord = (int)lcm_ll(ord, o);
                }
                if (ord != cert.expected.order)
                    throw error("catalogue " + e.name + ": certificate " +
                                cert.poly_file + " character order " +
                                std::to_string(ord) + " != expected " +
                                std::to_string(cert.expected.order));
                break;
            }
        }
    }
}

} // namespace

CatalogueEntry parse_catalogue_text(const std::string& text,
                                    const std::string& dir, bool verify) {
    CatalogueEntry e;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw error("catalogue file line " + std::to_string(lineno) + ": " + msg);
    };
    enum { Preamble, InGen } state = Preamble;
    std::vector<std::vector<Cyclo>> cur_rows;
    auto flush_gen = [&]() {
        if (state == InGen) {
            if ((int)cur_rows.size() != e.size) fail("generator row count mismatch");
            e.generators.emplace_back(e.size, cur_rows);
            cur_rows.clear();
        }
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "group") {
            std::string kw;
            if (!(ls >> e.name >> kw) || kw != "size") fail("bad group header");
            if (!(ls >> e.size) || e.size <= 0) fail("bad size");
            if (!(ls >> kw) || kw != "order") fail("bad group header");
            if (!(ls >> e.expected_order)) fail("bad order");
            if (!(ls >> kw) || kw != "projorder") fail("bad group header");
            if (!(ls >> e.expected_proj_order)) fail("bad projorder");
        } else if (first == "gen") {
            flush_gen();
            state = InGen;
        } else if (first == "cert") {
            flush_gen();
            state = Preamble;
            Certificate c;
            std::string spec;
            if (!(ls >> c.poly_file >> spec)) fail("bad cert line");
            if (spec == "trivial") c.expected.kind = CharacterSpec::Trivial;
            else if (spec == "semi") c.expected.kind = CharacterSpec::AnyCharacter;
            else if (spec == "order") {
                c.expected.kind = CharacterSpec::OfOrder;
                if (!(ls >> c.expected.order)) fail("bad cert order");
            } else fail("unknown character spec '" + spec + "'");
            e.certificates.push_back(std::move(c));
        } else if (state == InGen) {
            // a matrix row: comma-separated scalar expressions
            auto parts = split_entries(line);
            if ((int)parts.size() != e.size) fail("row entry count mismatch");
            std::vector<Cyclo> row;
            for (const auto& p : parts) row.push_back(parse_scalar(p));
            cur_rows.push_back(std::move(row));
        } else {
            fail("unexpected token '" + first + "'");
        }
    }
    flush_gen();
    if (e.name.empty()) throw error("catalogue file: missing group header");
    if (e.generators.empty()) throw error("catalogue file: no generators");
    if (verify) verify_entry(e, dir);
    return e;
}

std::string serialize_catalogue_text(const CatalogueEntry& e) {
    std::ostringstream os;
    os << "group " << e.name << " size " << e.size << " order "
       << e.expected_order << " projorder " << e.expected_proj_order << "\n";
    for (const auto& g : e.generators) {
        os << "gen\n";
        for (int i = 0; i < e.size; ++i) {
            for (int j = 0; j < e.size; ++j) {
                if (j) os << ", ";
                os << g.at(i, j).str();
            }
            os << "\n";
        }
    }
    for (const auto& c : e.certificates)
        os << "cert " << c.poly_file << " " << c.expected.str() << "\n";
    return os.str();
}

CatalogueEntry catalogue(const std::string& name) {
    auto names = catalogue_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string valid;
        for (const auto& n : names) valid += (valid.empty() ? "" : ", ") + n;
        throw error("unknown catalogue entry '" + name + "' (valid: " + valid + ")");
    }
    std::string dir = catalogue_directory();
    std::string path = dir + "/" + name + ".grp";
    std::ifstream in(path);
    if (!in) throw error("cannot open catalogue file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalogue_text(ss.str(), dir);
}

namespace {
struct EntrySlot {
    std::once_flag once;
    std::unique_ptr<CatalogueEntry> entry;
};
std::map<std::string, EntrySlot> g_entry_cache;
std::mutex g_entry_mutex;
}

const CatalogueEntry& catalogue_cached(const std::string& name) {
    EntrySlot* slot;
    {
        std::lock_guard<std::mutex> lock(g_entry_mutex);
        slot = &g_entry_cache[name];
    }
    // loads of distinct entries proceed in parallel; same-name loads share
    std::call_once(slot->once, [&] {
        slot->entry = std::make_unique<CatalogueEntry>(catalogue(name));
    });
    return *slot->entry;
}

} // namespace k3
