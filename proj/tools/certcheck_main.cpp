// Standalone certificate checker. Links only the checking library — no
// solver code — so a verified certificate never depends on the machinery
// that produced it.

#include <fstream>
#include <iostream>
#include <sstream>

#include "cert/certificate.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: frex-certcheck <certificate-file>\n";
    return 2;
  }
  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << argv[1] << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  frex::Status s = frex::check_certificate(buf.str());
  if (s.ok()) {
    std::cout << "certificate OK\n";
    return 0;
  }
  std::cerr << "certificate rejected: " << s.message << "\n";
  return 1;
}
