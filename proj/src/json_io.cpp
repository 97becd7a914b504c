#include "plethyra/json_io.hpp"

#include <stdexcept>

namespace plethyra {

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw std::invalid_argument("expected rational as string or integer");
}

Json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const Json& j) {
    Rat q = rat_from_json(j);
    if (!is_integer(q)) throw std::invalid_argument("expected an integer");
    return q.get_num();
}

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (unsigned part : p.parts()) j.push_back(part);
    return j;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    std::vector<unsigned> parts;
    for (const auto& x : j) parts.push_back(x.get<unsigned>());
    return Partition(std::move(parts));
}

Json to_json(const LaurentPoly& p) {
    Json j;
    j["vars"] = p.vars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = rat_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    LaurentPoly::TermMap terms;
    for (const auto& t : j.at("terms")) {
        ExpVec e = t.at("exp").get<ExpVec>();
        Rat c = rat_from_json(t.at("coeff"));
        if (e.size() != vars.size())
            throw std::invalid_argument("LaurentPoly JSON: exponent length mismatch");
        terms[e] += c;
    }
    return LaurentPoly(std::move(vars), std::move(terms));
}

Json to_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [l, c] : f.terms()) {
        Json t;
        t["partition"] = to_json(l);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

SymFunc symfunc_from_json(const Json& j) {
    SymFunc::TermMap terms;
    for (const auto& t : j.at("terms")) {
        Partition l = partition_from_json(t.at("partition"));
        LaurentPoly c = laurent_from_json(t.at("coeff"));
        auto [it, inserted] = terms.emplace(std::move(l), std::move(c));
        if (!inserted) it->second += c;
    }
    return SymFunc(std::move(terms));
}

Json to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (unsigned n = 0; n <= s.max_degree(); ++n) coeffs.push_back(to_json(s.at(n)));
    Json j;
    j["max_degree"] = s.max_degree();
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncatedSeries series_from_json(const Json& j) {
    unsigned n = j.at("max_degree").get<unsigned>();
    std::vector<SymFunc> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(symfunc_from_json(c));
    return TruncatedSeries(n, std::move(coeffs));
}

Json to_json(const ClassFunction& v) {
    Json values = Json::array();
    for (const auto& [l, x] : v.values()) {
        Json t;
        t["class"] = to_json(l);
        t["value"] = rat_to_json(x);
        values.push_back(std::move(t));
    }
    Json j;
    j["n"] = v.n();
    j["values"] = std::move(values);
    return j;
}

ClassFunction class_function_from_json(const Json& j) {
    unsigned n = j.at("n").get<unsigned>();
    std::map<Partition, Rat> values;
    for (const auto& t : j.at("values"))
        values[partition_from_json(t.at("class"))] = rat_from_json(t.at("value"));
    return ClassFunction(n, std::move(values));
}

Json to_json(const SubgroupProfile& k) {
    Json counts = Json::array();
    for (const auto& [l, c] : k.cycle_type_counts) {
        Json t;
        t["class"] = to_json(l);
        t["count"] = int_to_json(c);
        counts.push_back(std::move(t));
    }
    Json j;
    j["n"] = k.n;
    j["order"] = int_to_json(k.order);
    j["counts"] = std::move(counts);
    return j;
}

SubgroupProfile subgroup_profile_from_json(const Json& j) {
    SubgroupProfile k;
    k.n = j.at("n").get<unsigned>();
    k.order = int_from_json(j.at("order"));
    for (const auto& t : j.at("counts"))
        k.cycle_type_counts[partition_from_json(t.at("class"))] = int_from_json(t.at("count"));
    return k;
}

LaurentPoly betti_from_json(const Json& j) {
    std::map<int, Int> betti;
    for (auto it = j.begin(); it != j.end(); ++it)
        betti[std::stoi(it.key())] = int_from_json(it.value());
    return from_betti(betti);
}

LaurentPoly hodge_from_json(const Json& j) {
    std::vector<HodgeEntry> entries;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4)
            throw std::invalid_argument("hodge entry must be [p,q,k,dim]");
        entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), int_from_json(e[3])});
    }
    return from_hodge(entries);
}

Json to_json(const SpaceDescriptor& x) {
    Json j;
    j["name"] = x.name;
    j["poly"] = to_json(x.poly);
    return j;
}

SpaceDescriptor space_from_json(const Json& j) {
    SpaceDescriptor x;
    x.name = j.value("name", std::string("space"));
    int sources = j.count("poly") + j.count("betti") + j.count("hodge");
    if (sources != 1)
        throw std::invalid_argument("space: exactly one of poly/betti/hodge required");
    if (j.count("poly"))
        x.poly = laurent_from_json(j.at("poly"));
    else if (j.count("betti"))
        x.poly = betti_from_json(j.at("betti"));
    else
        x.poly = hodge_from_json(j.at("hodge"));
    return x;
}

Json to_json(const GradedEndomorphism& g) {
    Json blocks = Json::array();
    for (const auto& [k, m] : g.blocks) {
        Json rows = Json::array();
        for (const auto& row : m) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(rat_to_json(x));
            rows.push_back(std::move(r));
        }
        Json b;
        b["degree"] = k;
        b["matrix"] = std::move(rows);
        blocks.push_back(std::move(b));
    }
    Json j;
    j["blocks"] = std::move(blocks);
    return j;
}

GradedEndomorphism endo_from_json(const Json& j) {
    GradedEndomorphism g;
    for (const auto& b : j.at("blocks")) {
        int degree = b.at("degree").get<int>();
        RatMatrix m;
        for (const auto& row : b.at("matrix")) {
            std::vector<Rat> r;
            for (const auto& x : row) r.push_back(rat_from_json(x));
            m.push_back(std::move(r));
        }
        if (g.blocks.count(degree))
            throw std::invalid_argument("endomorphism: duplicate degree block");
        g.blocks[degree] = std::move(m);
    }
    g.validate();
    return g;
}

Json to_json(const FiniteGroupData& g) {
    Json classes = Json::array();
    for (const auto& c : g.classes) {
        Json pm;
        for (const auto& [r, target] : c.power_maps) pm[std::to_string(r)] = target;
        Json jc;
        jc["name"] = c.name;
        jc["size"] = int_to_json(c.size);
        jc["power_maps"] = std::move(pm);
        classes.push_back(std::move(jc));
    }
    Json j;
    j["order"] = int_to_json(g.order);
    j["classes"] = std::move(classes);
    return j;
}

FiniteGroupData group_from_json(const Json& j) {
    FiniteGroupData g;
    g.order = int_from_json(j.at("order"));
    for (const auto& jc : j.at("classes")) {
        GroupClass c;
        c.name = jc.at("name").get<std::string>();
        c.size = int_from_json(jc.at("size"));
        if (jc.count("power_maps"))
            for (auto it = jc.at("power_maps").begin(); it != jc.at("power_maps").end(); ++it)
                c.power_maps[static_cast<unsigned>(std::stoul(it.key()))] =
                    it.value().get<std::string>();
        c.power_maps[1] = c.name;
        g.classes.push_back(std::move(c));
    }
    g.validate();
    return g;
}

Json to_json(const RootOfUnityElement& x) {
    Json terms = Json::array();
    for (const auto& [f, m] : x.terms()) {
        Json t;
        t["root"] = std::to_string(f.first) + "/" + std::to_string(f.second);
        t["mult"] = int_to_json(m);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

RootOfUnityElement root_of_unity_from_json(const Json& j) {
    RootOfUnityElement x;
    for (const auto& t : j.at("terms")) {
        std::string root = t.at("root").get<std::string>();
        auto slash = root.find('/');
        unsigned long a, q;
        if (slash == std::string::npos) {
            a = std::stoul(root);
            q = 1;
        } else {
            a = std::stoul(root.substr(0, slash));
            q = std::stoul(root.substr(slash + 1));
        }
        x = x + RootOfUnityElement::root(a, q, int_from_json(t.at("mult")));
    }
    return x;
}

}  // namespace plethyra
