#include "liaset/dataset.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace liaset {

using nlohmann::json;

i64 Dataset::effective_universe() const {
    if (universe > 0) return universe;
    i64 best = 0;
    for (const auto& [name, points] : sets)
        for (const Vec& p : points)
            for (i64 c : p) best = std::max(best, c < 0 ? -c : c);
    return best;
}

Dataset dataset_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("dataset is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("dataset root must be an object");

    Dataset d;
    if (j.contains("universe")) {
        if (!j["universe"].is_number_integer())
            throw std::invalid_argument("universe must be an integer");
        d.universe = j["universe"].get<i64>();
        if (d.universe < 0) throw std::invalid_argument("universe must be >= 0");
    }
    if (j.contains("free")) {
        if (!j["free"].is_object()) throw std::invalid_argument("free must be an object");
        for (const auto& [name, val] : j["free"].items()) {
            if (!val.is_number_integer())
                throw std::invalid_argument("free scalar " + name + " must be an integer");
            d.free[name] = val.get<i64>();
        }
    }
    if (!j.contains("sets") || !j["sets"].is_object())
        throw std::invalid_argument("dataset needs a sets object");
    for (const auto& [name, rows] : j["sets"].items()) {
        if (name.empty()) throw std::invalid_argument("set names must be nonempty");
        if (!rows.is_array())
            throw std::invalid_argument("set " + name + " must be an array of points");
        std::vector<Vec> points;
        std::size_t dim = 0;
        for (const auto& row : rows) {
            if (!row.is_array() || row.empty())
                throw std::invalid_argument("set " + name + ": each point is a nonempty array");
            Vec p;
            for (const auto& c : row) {
                if (!c.is_number_integer())
                    throw std::invalid_argument("set " + name + ": coordinates are integers");
                p.push_back(c.get<i64>());
            }
            if (points.empty())
                dim = p.size();
            else if (p.size() != dim)
                throw std::invalid_argument("set " + name + ": mixed point dimensions");
            if (d.universe > 0)
                for (i64 c : p)
                    if (c > d.universe || c < -d.universe)
                        throw std::invalid_argument("set " + name +
                                                    ": coordinate outside the declared universe");
            points.push_back(std::move(p));
        }
        d.sets[name] = std::move(points);
    }
    return d;
}

std::string dataset_to_json(const Dataset& d) {
    // nlohmann's default object is key-sorted, so dump() is deterministic.
    json j;
    j["universe"] = d.universe;
    j["free"] = json::object();
    for (const auto& [name, v] : d.free) j["free"][name] = v;
    j["sets"] = json::object();
    for (const auto& [name, points] : d.sets) {
        json rows = json::array();
        for (const Vec& p : points) rows.push_back(p);
        j["sets"][name] = std::move(rows);
    }
    return j.dump();
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return dataset_from_json(buf.str());
}

void save_dataset(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset file " + path);
    out << dataset_to_json(d) << "\n";
}

Instance bind(const Formula& f, const Dataset& d) {
    Instance inst;

    // Free scalars first: every name the matrix mentions needs a value.
    std::string missing;
    for (const std::string& name : free_names(f))
        if (!d.free.count(name)) missing += (missing.empty() ? "" : ", ") + name;
    if (!missing.empty())
        throw std::invalid_argument("dataset lacks free scalar values: " + missing);
    Formula g = substitute_free(f, d.free);

    std::vector<std::size_t> dims;
    for (const auto& q : g.quants) {
        auto it = d.sets.find(q.set_name);
        if (it == d.sets.end())
            throw std::invalid_argument("dataset has no set named " + q.set_name);
        const std::vector<Vec>& points = it->second;
        int used = g.max_coord_used(q.var);
        std::size_t dim;
        if (!points.empty()) {
            dim = points[0].size();
            if (q.declared_dim > 0 && dim != static_cast<std::size_t>(q.declared_dim))
                throw std::invalid_argument("set " + q.set_name + " has dimension " +
                                            std::to_string(dim) + ", formula declares " +
                                            std::to_string(q.declared_dim));
        } else {
            // No data to witness a dimension; fall back to what the formula needs.
            dim = q.declared_dim > 0 ? static_cast<std::size_t>(q.declared_dim)
                                     : static_cast<std::size_t>(std::max(used, 1));
        }
        if (static_cast<std::size_t>(used) > dim)
            throw std::invalid_argument("formula uses coordinate " + std::to_string(used) +
                                        " of " + q.var + " but set " + q.set_name +
                                        " has dimension " + std::to_string(dim));
        inst.quants.push_back(q.q);
        inst.var_names.push_back(q.var);
        inst.set_names.push_back(q.set_name);
        inst.sets.push_back(points);
        dims.push_back(dim);
    }

    std::map<std::string, std::pair<std::size_t, std::size_t>> position;  // var -> (pos, dim)
    for (std::size_t j = 0; j < inst.var_names.size(); ++j)
        position[inst.var_names[j]] = {j, dims[j]};

    Dnf dnf = to_dnf(g.body);
    for (const CoClause& clause : dnf.clauses) {
        BoundClause bc;
        for (const GeAtom& atom : clause.atoms) {
            BoundAtom ba;
            ba.coeffs.resize(inst.k());
            for (std::size_t j = 0; j < inst.k(); ++j)
                ba.coeffs[j].assign(position[inst.var_names[j]].second, 0);
            if (!atom.free.empty())
                throw std::logic_error("free scalar survived substitution");
            for (const VarCoeff& vc : atom.vars) {
                auto [pos, dim] = position.at(vc.var);
                ba.coeffs[pos][vc.coord] = vc.coeff;
            }
            if (atom.constant == std::numeric_limits<i64>::min())
                throw std::invalid_argument("atom constant overflow while binding");
            ba.rhs = -atom.constant;
            bc.atoms.push_back(std::move(ba));
        }
        inst.dnf.push_back(std::move(bc));
    }
    return inst;
}

}  // namespace liaset
