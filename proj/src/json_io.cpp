#include "xnlplab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace xnlplab {

Json nnccm_to_json(const NnccmInstance& m) {
    Json checks = Json::array();
    for (const NnccmCheck& c : m.checks) checks.push_back({c.c1, c.n1, c.c2, c.n2});
    return Json{{"k", m.counters}, {"n", m.max_value}, {"r", m.rounds()}, {"checks", checks}};
}

NnccmInstance nnccm_from_json(const Json& j) {
    NnccmInstance m;
    m.counters = j.at("k").get<int>();
    m.max_value = j.at("n").get<int>();
    int r = j.at("r").get<int>();
    for (const Json& c : j.at("checks"))
        m.checks.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>(),
                            c.at(3).get<int>()});
    if (r != m.rounds())
        throw std::invalid_argument("nnccm: r does not match the check count");
    m.validate();
    return m;
}

Json run_to_json(const Run& r) { return Json{{"values", r.values}}; }

Run run_from_json(const Json& j) {
    Run r;
    r.values = j.at("values").get<std::vector<std::vector<int>>>();
    return r;
}

Json shuffle_to_json(const ShuffleInstance& s) {
    Json sources = Json::array();
    for (const Word& w : s.sources) sources.push_back(w.to_string());
    return Json{{"sources", sources}, {"target", s.target.to_string()}};
}

ShuffleInstance shuffle_from_json(const Json& j) {
    ShuffleInstance s;
    for (const Json& w : j.at("sources"))
        s.sources.push_back(Word::from_string(w.get<std::string>()));
    s.target = Word::from_string(j.at("target").get<std::string>());
    return s;
}

Json witness_to_json(const InterleavingWitness& w) {
    Json triples = Json::array();
    for (std::size_t i = 0; i < w.assignment.size(); ++i)
        for (std::size_t p = 0; p < w.assignment[i].size(); ++p)
            triples.push_back({static_cast<int>(i) + 1, static_cast<int>(p) + 1,
                               w.assignment[i][p]});
    return triples;
}

InterleavingWitness witness_from_json(const Json& j, const ShuffleInstance& inst) {
    InterleavingWitness w;
    w.assignment.resize(inst.sources.size());
    for (std::size_t i = 0; i < inst.sources.size(); ++i)
        w.assignment[i].assign(inst.sources[i].size(), 0);
    for (const Json& t : j) {
        int i = t.at(0).get<int>(), p = t.at(1).get<int>(), pos = t.at(2).get<int>();
        if (i < 1 || i > static_cast<int>(w.assignment.size()))
            throw std::invalid_argument("witness: source index out of range");
        if (p < 1 || p > static_cast<int>(w.assignment[i - 1].size()))
            throw std::invalid_argument("witness: letter index out of range");
        w.assignment[i - 1][p - 1] = pos;
    }
    return w;
}

Json reduction_meta_to_json(const ReductionMeta& m) {
    return Json{{"N", m.reps}, {"machine", nnccm_to_json(m.machine)}};
}

Json digraph_to_json(const Digraph& g) {
    Json arcs = Json::array();
    for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
    Json labels = Json::object();
    for (const auto& [v, lab] : g.labels) labels[std::to_string(v)] = lab.to_string();
    return Json{{"n", g.vertex_count()}, {"arcs", arcs}, {"labels", labels}};
}

Digraph digraph_from_json(const Json& j) {
    Digraph g(j.at("n").get<int>());
    for (const Json& a : j.at("arcs")) g.add_arc(a.at(0).get<int>(), a.at(1).get<int>());
    if (j.contains("labels"))
        for (const auto& [key, value] : j.at("labels").items()) {
            auto lab = GadgetLabel::parse(value.get<std::string>());
            if (!lab) throw std::invalid_argument("digraph: bad label " + key);
            g.labels.emplace(std::stoi(key), *lab);
        }
    return g;
}

Json ordering_to_json(const TopOrdering& f) { return Json{{"position", f.position}}; }

TopOrdering ordering_from_json(const Json& j) {
    TopOrdering f;
    f.position = j.at("position").get<std::vector<int>>();
    return f;
}

Json sched_to_json(const SchedInstance& s) {
    Json jobs = Json::array();
    for (const SchedJob& j : s.jobs) jobs.push_back({{"p", j.duration}, {"size", j.size}});
    Json prec = Json::array();
    for (const PrecArc& a : s.prec) {
        Json arc{{"from", a.from}, {"to", a.to}, {"kind", delay_kind_name(a.kind)}};
        if (a.kind != DelayKind::none) arc["l"] = a.delay;
        prec.push_back(arc);
    }
    Json out{{"m", s.machines}, {"D", s.deadline}, {"jobs", jobs}, {"prec", prec}};
    if (s.structure == PrecStructure::chains) out["structure"] = "chains";
    return out;
}

SchedInstance sched_from_json(const Json& j) {
    SchedInstance s;
    s.machines = j.at("m").get<int>();
    s.deadline = j.at("D").get<int>();
    for (const Json& job : j.at("jobs")) {
        SchedJob sj;
        sj.duration = job.at("p").get<int>();
        if (job.contains("size")) sj.size = job.at("size").get<int>();
        s.jobs.push_back(sj);
    }
    for (const Json& arc : j.at("prec")) {
        PrecArc a;
        a.from = arc.at("from").get<int>();
        a.to = arc.at("to").get<int>();
        a.kind = delay_kind_from_name(arc.at("kind").get<std::string>());
        a.delay = arc.contains("l") ? arc.at("l").get<int>() : 0;
        s.prec.push_back(a);
    }
    if (j.contains("structure") && j.at("structure").get<std::string>() == "chains")
        s.structure = PrecStructure::chains;
    s.validate();
    return s;
}

Json schedule_to_json(const Schedule& s) { return Json{{"start", s.start}}; }

Schedule schedule_from_json(const Json& j) {
    Schedule s;
    s.start = j.at("start").get<std::vector<int>>();
    return s;
}

Json binpack_to_json(const BinPackingInstance& b) {
    return Json{{"B", b.capacity}, {"k", b.bins}, {"items", b.items}};
}

BinPackingInstance binpack_from_json(const Json& j) {
    BinPackingInstance b;
    b.capacity = j.at("B").get<int>();
    b.bins = j.at("k").get<int>();
    b.items = j.at("items").get<std::vector<int>>();
    b.validate();
    return b;
}

Json packing_to_json(const Packing& p) { return Json{{"assign", p.assign}}; }

Packing packing_from_json(const Json& j) {
    Packing p;
    p.assign = j.at("assign").get<std::vector<int>>();
    return p;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Json::parse_error::create(101, 0, "cannot open " + path, nullptr);
    return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace xnlplab
