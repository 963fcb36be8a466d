#include "rsc/io.hpp"

#include "rsc/errors.hpp"

#include <fstream>
#include <sstream>

namespace rsc {
namespace io {

Complex load_complex_text(std::istream& in) {
    std::vector<Face> facets;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        Face f;
        long long v;
        while (ls >> v) f.push_back(static_cast<Vertex>(v));
        if (!ls.eof()) {
            ls.clear();
            std::string junk;
            ls >> junk;
            throw MalformedInputError("line " + std::to_string(lineno) +
                                      ": unexpected token '" + junk + "'");
        }
        if (!f.empty()) facets.push_back(std::move(f));
    }
    return Complex::from_facets(facets);
}

void save_complex_text(std::ostream& out, const Complex& c) {
    for (const Face& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << f[i];
        }
        out << '\n';
    }
}

nlohmann::json complex_to_json(const Complex& c, const std::optional<SampleMeta>& meta) {
    nlohmann::json by_dim = nlohmann::json::array();
    for (int d = 0; d <= c.dim(); ++d) {
        nlohmann::json level = nlohmann::json::array();
        const FaceSet& fs = c.faces(d);
        for (std::size_t k = 0; k < fs.size(); ++k) {
            auto face = fs[k];
            level.push_back(std::vector<Vertex>(face.begin(), face.end()));
        }
        by_dim.push_back(std::move(level));
    }
    nlohmann::json j;
    if (meta) {
        j["n"] = meta->n;
        j["r"] = meta->r;
        j["seed"] = meta->seed;
        j["trial"] = meta->trial;
    }
    j["faces_by_dim"] = std::move(by_dim);
    return j;
}

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.contains("faces_by_dim"))
        throw MalformedInputError("complex JSON lacks 'faces_by_dim'");
    std::vector<std::vector<Face>> by_dim;
    for (const auto& level : j.at("faces_by_dim")) {
        std::vector<Face> faces;
        for (const auto& f : level) faces.push_back(f.get<Face>());
        by_dim.push_back(std::move(faces));
    }
    return Complex::from_faces_by_dim(by_dim);
}

Complex load_complex_stream(std::istream& in) {
    // Sniff: JSON begins with '{'.
    int ch = in.peek();
    while (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') {
        in.get();
        ch = in.peek();
    }
    if (ch == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw MalformedInputError(std::string("bad complex JSON: ") + e.what());
        }
        return complex_from_json(j);
    }
    return load_complex_text(in);
}

Complex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open '" + path + "'");
    return load_complex_stream(in);
}

nlohmann::json rational_to_json(const Rational& x) {
    return nlohmann::json::array({x.get_num().get_str(), x.get_den().get_str()});
}

nlohmann::json domain_to_json(const DensityDomain& d) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : d.constraints) {
        nlohmann::json nu = nlohmann::json::array();
        for (const auto& x : c.nu) nu.push_back(rational_to_json(x));
        cs.push_back({{"W", c.witness}, {"nu", std::move(nu)}});
    }
    return {{"r", d.r}, {"reduced", d.reduced}, {"constraints", std::move(cs)}};
}

nlohmann::json polygon_to_json(const Polygon2& poly) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : poly)
        out.push_back(nlohmann::json::array({rational_to_json(p[0]), rational_to_json(p[1])}));
    return out;
}

} // namespace io
} // namespace rsc
