// Regenerates the .prf scripts shipped under theorems/ from the script
// builders. Run manually after changing a builder:
//   ./build/tools/gen_theorems fixtures/f1.dex theorems/
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dex/proof.hpp"
#include "dex/signature.hpp"
#include "dex/theorems.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_theorems SPEC.dex OUTDIR\n";
    return 2;
  }
  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  dex::Signature sig = dex::parse_signature(buf.str());

  for (const auto& script : dex::shipped_scripts(sig)) {
    dex::ProofVerdict v = dex::check_proof(sig, script);
    if (!v.ok) {
      std::cerr << script.title << ": " << dex::to_string(v) << "\n";
      return 1;
    }
    std::filesystem::path out =
        std::filesystem::path(argv[2]) / (script.title + ".prf");
    std::ofstream file(out);
    file << dex::print_proof(script);
    std::cout << "wrote " << out.string() << "\n";
  }
  return 0;
}
