#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nestedasp/equivalence.hpp"
#include "nestedasp/multivalued.hpp"
#include "nestedasp/program.hpp"
#include "nestedasp/prover.hpp"
#include "nestedasp/semantics.hpp"
#include "nestedasp/transforms.hpp"

namespace nasp {

inline constexpr std::string_view kVersion = "1.0.0";

// Human output is tabular text. Machine output is one JSON object with the
// fields version, class, signature and results (plus command-specific
// fields); atom arrays are sorted and keys are ordered, so equal inputs
// give byte-identical documents.
enum class Format { Human, Machine };

// "{a, b}", "{}" for the empty set.
std::string atomSetText(const AtomSet& set);

std::string emitAnswerSets(const Program& program, const AtomSets& sets, std::string_view semantics,
                           std::string_view method, Format format);
std::string emitReport(const Program& program, const std::vector<AnswerSetReport>& reports, Format format);
std::string emitVerdict(const Program& p1, const Program& p2, const EquivalenceVerdict& verdict, Format format);
std::string emitTransform(const Program& input, const TransformResult& result, bool trace, Format format);
std::string emitPipeline(const Program& input, const PipelineCheck& check, Format format);
// `logic` is "int", "g3" or "classical"; the judgment's derivation and
// countermodel are included when present.
std::string emitJudgment(const Program& theory, const ProofJudgment& judgment, std::string_view logic, Format format);
std::string emitWitness(const Interpretation& interp, const Program& witness, Format format);

struct SelftestCase {
  std::string name;
  bool pass = false;
  std::string detail;
};
std::string emitSelftest(std::uint64_t seed, const std::vector<SelftestCase>& cases, Format format);

}  // namespace nasp
