#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nic/embedding.hpp"

namespace nic {

// Runs the nicplanar command line. args excludes the program name.
// Exit codes: 0 success/accepted/pass, 1 rejected/failed check, 2 usage, I/O or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Planarization drawings for the export command.
std::string planarization_dot(const NicEmbedding& emb);
std::string planarization_svg(const NicEmbedding& emb);

}  // namespace nic
