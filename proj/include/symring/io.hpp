#pragma once

#include <string>
#include <vector>

#include "symring/group_ring.hpp"
#include "symring/identities.hpp"
#include "symring/tensor.hpp"

namespace symring {

/// All readers accept '#' line comments and blank lines and report
/// malformed content as "path:line: reason" (an Error).

/// Term lines "NUM/DEN : i1 i2 ... ir", one term per line.
GroupRingElement read_element_file(const std::string& path);

/// Header "r=<r>", then one generator per line: term lines joined by ';'.
struct SymmetrySpec {
    int r = 0;
    std::vector<GroupRingElement> generators;
};
SymmetrySpec read_symmetry_file(const std::string& path);

/// Header "d=<d> r=<r>", then d^r fractions in row-major index order.
TensorDense read_tensor_file(const std::string& path);

/// "+,+,+,-": one sign per basis direction.
MetricSignature parse_signature(const std::string& text);

/// Header "r=<r>" optionally followed by "l=<l> b0=<i,..,i>", then term
/// lines "NUM/DEN : i1 ... ir".
Expression read_expression_file(const std::string& path);

/// Writers mirror the reader syntax exactly; emitted files re-parse to
/// equal values.
std::string element_lines(const GroupRingElement& a);
std::string expression_lines(const Expression& tau);
/// One identity per stanza, stanzas separated by one blank line.
std::string identity_stanzas(const IdentityBasis& ids);

}  // namespace symring
