// Generates the shipped embedding certificates: natural inclusions for
// A6 < A7, A7 < A12 and M12 < A12, and a searched generator mapping for
// PSL2(7) < A7 (the action of GL3(2) on the seven nonzero vectors).
// Every certificate is re-verified before it is written.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "coverforge/constructors.hpp"
#include "coverforge/embed.hpp"

using namespace coverforge;

namespace {

EmbeddingCertificate natural_inclusion(const Group& h, unsigned target_degree) {
  EmbeddingCertificate cert;
  for (const Perm& g : h.generators()) {
    cert.source_generators.push_back(g);
    cert.images.push_back(g.extended(target_degree));
  }
  return cert;
}

void write_cert(const std::string& dir, const std::string& name, const Group& h,
                const Group& g, const EmbeddingCertificate& cert) {
  if (!verify_certificate(h, g, cert))
    throw Error("certificate " + name + " failed verification");
  std::ofstream out(dir + "/" + name + ".txt");
  if (!out) throw Error("cannot write certificate " + name);
  out << "# " << name << "\n" << serialize_certificate(cert);
  std::cout << name << ": ok\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"embedding certificate fixture generator"};
  std::string out_dir = "data/certificates";
  std::string data_dir = default_data_dir();
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--data", data_dir, "fixture directory (for the M12 generators)");
  CLI11_PARSE(app, argc, argv);

  try {
    Group a7 = alt(7);
    Group a12 = alt(12);

    write_cert(out_dir, "a6_in_a7", alt(6), a7, natural_inclusion(alt(6), 7));
    write_cert(out_dir, "a7_in_a12", a7, a12, natural_inclusion(a7, 12));

    Group m = m12(data_dir + "/m12.txt");
    write_cert(out_dir, "m12_in_a12", m, a12, natural_inclusion(m, 12));

    Group l27 = psl2(7);
    auto found = find_embedding(l27, a7);
    if (!found) throw Error("no embedding of PSL2(7) into A7 found");
    write_cert(out_dir, "psl2_7_in_a7", l27, a7, *found);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
