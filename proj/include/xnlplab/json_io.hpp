#ifndef XNLPLAB_JSON_IO_HPP
#define XNLPLAB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "xnlplab/binpack.hpp"
#include "xnlplab/digraph.hpp"
#include "xnlplab/hardness.hpp"
#include "xnlplab/nnccm.hpp"
#include "xnlplab/scheduling.hpp"
#include "xnlplab/shuffle.hpp"

namespace xnlplab {

using Json = nlohmann::json;

// Schema errors (wrong field types, missing keys) throw Json exceptions;
// domain violations surface via the instances' validate().

Json nnccm_to_json(const NnccmInstance& m);
NnccmInstance nnccm_from_json(const Json& j);
Json run_to_json(const Run& r);
Run run_from_json(const Json& j);

Json shuffle_to_json(const ShuffleInstance& s);
ShuffleInstance shuffle_from_json(const Json& j);
Json witness_to_json(const InterleavingWitness& w);  // [i, p, targetPos] triples
InterleavingWitness witness_from_json(const Json& j, const ShuffleInstance& inst);
Json reduction_meta_to_json(const ReductionMeta& m);

Json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const Json& j);
Json ordering_to_json(const TopOrdering& f);
TopOrdering ordering_from_json(const Json& j);

Json sched_to_json(const SchedInstance& s);
SchedInstance sched_from_json(const Json& j);
Json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j);

Json binpack_to_json(const BinPackingInstance& b);
BinPackingInstance binpack_from_json(const Json& j);
Json packing_to_json(const Packing& p);
Packing packing_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace xnlplab

#endif
