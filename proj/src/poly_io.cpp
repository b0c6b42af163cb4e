#include "k3audit/poly_io.hpp"
#include "k3audit/scalar_parser.hpp"

#include <fstream>
#include <sstream>

namespace k3 {

PolyFile parse_poly_file(std::istream& in, const std::string& origin) {
    PolyFile out;
    std::string line;
    int nvars = -1;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw error("poly file " + origin + ":" + std::to_string(lineno) +
                    ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "vars") {
            if (nvars != -1) fail("duplicate vars header");
            if (!(ls >> nvars) || nvars <= 0) fail("bad variable count");
            out.poly = Poly(nvars);
            std::string kw;
            if (ls >> kw) {
                if (kw != "weights") fail("expected 'weights'");
                WeightSystem w;
                int wi;
                while (ls >> wi) {
                    if (wi < 1) fail("weights must be >= 1");
                    w.weights.push_back(wi);
                }
                if ((int)w.weights.size() != nvars) fail("weight count mismatch");
                out.weights = w;
            }
            continue;
        }
        if (nvars == -1) fail("term before vars header");
        auto semi = line.find(';');
        if (semi == std::string::npos) fail("expected ';' in term line");
        Cyclo c = parse_scalar(line.substr(0, semi));
        std::istringstream es(line.substr(semi + 1));
        Monomial m;
        int e;
        while (es >> e) {
            if (e < 0) fail("negative exponent");
            m.push_back(e);
        }
        if ((int)m.size() != nvars) fail("exponent count mismatch");
        out.poly.add_term(m, c);
    }
    if (nvars == -1) fail("missing vars header");
    return out;
}

PolyFile load_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open poly file: " + path);
    return parse_poly_file(in, path);
}

std::string serialize_poly_file(const Poly& f,
                                const std::optional<WeightSystem>& w) {
    std::ostringstream os;
    os << "vars " << f.nvars();
    if (w) {
        os << " weights";
        for (int wi : w->weights) os << " " << wi;
    }
    os << "\n";
    for (const auto& [m, c] : f.terms()) {
        os << c.str() << " ;";
        for (int e : m) os << " " << e;
        os << "\n";
    }
    return os.str();
}

} // namespace k3
