// Prints the id of the fixture goal vertex; compared across processes.

#include <iostream>

#include "sagen/graph.h"

int main() {
  std::cout << sagen::vertex_id(sagen::VertexKind::kGoal,
                                {{"property", "availability"},
                                 {"subject", "wf-volt-ctrl"}})
            << "\n";
}
