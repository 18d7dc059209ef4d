#include "umtlab/models/serialize.hpp"

#include <cstdio>

namespace umtlab {

namespace {

// Shortest round-trip decimal for doubles keeps dumps byte-stable.
void put_real(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

void write_instance(std::ostream& out, const KnowledgeGraphInstance& inst) {
  out << "umtlab-instance 1 kg\n";
  out << "n " << inst.n << "\nr " << inst.r << "\np ";
  put_real(out, inst.p);
  out << "\nalpha ";
  put_real(out, inst.alpha);
  out << "\ndegenerate " << (inst.degenerate ? 1 : 0) << "\n";
  for (std::uint64_t x = 0; x < inst.star.size(); ++x) {
    out << "star " << x << " " << inst.star[x] << "\n";
  }
  for (NodePair e : inst.p_edges) {
    out << "pedge " << e.first << " " << e.second << "\n";
  }
  for (NodePair e : inst.t_edges_src) {
    out << "tedge " << e.first << " " << e.second << "\n";
  }
}

void write_instance(std::ostream& out, const CommonNonsenseInstance& inst) {
  out << "umtlab-instance 1 cn\n";
  out << "t_size " << inst.t_size << "\np_size " << inst.p_size << "\nalpha ";
  put_real(out, inst.alpha);
  out << "\ndegenerate " << (inst.degenerate ? 1 : 0) << "\n";
  out << "star " << *inst.family.star_index() << "\n";
  for (TextId y = 0; y < inst.p_size; ++y) {
    if (inst.sensical[y]) out << "sensical " << y << "\n";
  }
  for (std::uint64_t k = 0; k < inst.family.size(); ++k) {
    const Translator t = inst.family.member(k);
    for (TextId x = 0; x < inst.t_size; ++x) {
      out << "map " << k << " " << x << " " << t(x) << "\n";
    }
  }
}

void write_instance(std::ostream& out, const TreeLanguageInstance& inst) {
  out << "umtlab-instance 1 rt\n";
  out << "vocab " << inst.vocab_size << "\ndepth " << inst.depth << "\na "
      << inst.a << "\nb " << inst.b << "\n";
  for (TextId t : inst.p_texts) out << "ptext " << t << "\n";
  for (TextId t : inst.t_texts) out << "ttext " << t << "\n";
}

void write_instance(std::ostream& out, const LowerBoundInstance& inst) {
  out << "umtlab-instance 1 lb\n";
  out << "rows " << inst.a << "\ncols " << inst.b << "\nt_size " << inst.t_size
      << "\nalpha ";
  put_real(out, inst.alpha);
  out << "\nm " << inst.m << "\nshift_denominator " << inst.shift_denominator
      << "\ndegenerate " << (inst.degenerate ? 1 : 0) << "\n";
  out << "star " << *inst.family.star_index() << "\n";
  for (TextId y = 0; y < inst.t_size; ++y) {
    if (inst.kept[y]) out << "kept " << y << "\n";
  }
}

}  // namespace umtlab
