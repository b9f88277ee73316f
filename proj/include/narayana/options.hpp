#pragma once

namespace narayana {

/// Size limits and parallelism shared by every enumerating operation.
struct ComputeOptions {
  /// Largest n*m (or |shape|) accepted by word and tableau enumeration.
  int max_cells = 22;
  /// Largest poset accepted by linear-extension enumeration.
  int max_poset_elements = 12;
  /// Largest poset accepted by exhaustive (P, omega)-partition counting.
  int max_brute_force_elements = 8;
  /// Worker threads for the parallel kernels; 0 means the OpenMP default.
  int jobs = 0;
};

}  // namespace narayana
