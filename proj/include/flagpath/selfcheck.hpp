#pragma once

#include <ostream>

namespace flagpath {

// Runs the cross-oracle invariant suite at desk scale, printing one line per
// invariant. Returns the number of failed invariants (0 means all passed).
int run_selfcheck(std::ostream& out);

}  // namespace flagpath
