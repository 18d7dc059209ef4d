#pragma once

#include <ostream>

#include "umtlab/models/cn.hpp"
#include "umtlab/models/kg.hpp"
#include "umtlab/models/lower_bound.hpp"
#include "umtlab/models/rt.hpp"

namespace umtlab {

// Line-oriented text dumps for inspection and golden-file tests. Every dump
// starts with the versioned header "umtlab-instance 1 <model>" followed by
// one record per line: parameters first, then one line per edge / text /
// map entry. Intended for enumerable instances.
void write_instance(std::ostream& out, const KnowledgeGraphInstance& inst);
void write_instance(std::ostream& out, const CommonNonsenseInstance& inst);
void write_instance(std::ostream& out, const TreeLanguageInstance& inst);
void write_instance(std::ostream& out, const LowerBoundInstance& inst);

}  // namespace umtlab
