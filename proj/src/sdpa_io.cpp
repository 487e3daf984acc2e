#include "polyadp/sdpa_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace polyadp {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_entries(std::ostringstream& out, int matno, const SdpCoeffs& coeffs) {
  SdpCoeffs c = coeffs;
  c.canonicalize();
  for (const auto& e : c.entries)
    out << matno << " " << e.block + 1 << " " << e.i + 1 << " " << e.j + 1
        << " " << fmt(e.value) << "\n";
}

}  // namespace

std::string export_sdpa(const SdpProblem& prob) {
  prob.validate();
  std::ostringstream out;
  out << "\"polyadp sdpa export\n";
  out << prob.constraints.size() << " = mDIM\n";
  out << prob.blocks.size() << " = nBLOCK\n";
  for (std::size_t i = 0; i < prob.blocks.size(); ++i) {
    if (i) out << " ";
    out << (prob.blocks[i].diagonal ? -prob.blocks[i].dim : prob.blocks[i].dim);
  }
  out << "\n";
  for (std::size_t k = 0; k < prob.rhs.size(); ++k) {
    if (k) out << " ";
    out << fmt(prob.rhs[k]);
  }
  out << "\n";
  append_entries(out, 0, prob.objective);
  for (std::size_t k = 0; k < prob.constraints.size(); ++k)
    append_entries(out, static_cast<int>(k) + 1, prob.constraints[k]);
  return out.str();
}

SdpProblem parse_sdpa(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> data_lines;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const char c = line[0];
    if (c == '*' || c == '"') continue;
    data_lines.push_back(line);
  }
  if (data_lines.size() < 3)
    throw std::runtime_error("parse_sdpa: truncated header");

  auto numbers = [](const std::string& s) {
    std::string clean = s;
    for (char& ch : clean)
      if (ch == ',' || ch == '{' || ch == '}' || ch == '(' || ch == ')')
        ch = ' ';
    std::istringstream ss(clean);
    std::vector<double> v;
    double x;
    while (ss >> x) v.push_back(x);
    return v;
  };

  std::size_t pos = 0;
  const auto mdim_v = numbers(data_lines[pos++]);
  if (mdim_v.empty()) throw std::runtime_error("parse_sdpa: missing mDIM");
  const int mdim = static_cast<int>(mdim_v[0]);
  const auto nblock_v = numbers(data_lines[pos++]);
  if (nblock_v.empty()) throw std::runtime_error("parse_sdpa: missing nBLOCK");
  const int nblock = static_cast<int>(nblock_v[0]);

  SdpProblem prob;
  std::vector<double> sizes;
  while (pos < data_lines.size() && static_cast<int>(sizes.size()) < nblock) {
    const auto v = numbers(data_lines[pos++]);
    sizes.insert(sizes.end(), v.begin(), v.end());
  }
  if (static_cast<int>(sizes.size()) != nblock)
    throw std::runtime_error("parse_sdpa: bad block size vector");
  for (double s : sizes) {
    SdpBlockDesc b;
    b.diagonal = s < 0;
    b.dim = static_cast<int>(s < 0 ? -s : s);
    prob.blocks.push_back(b);
  }

  std::vector<double> rhs;
  while (pos < data_lines.size() && static_cast<int>(rhs.size()) < mdim) {
    const auto v = numbers(data_lines[pos++]);
    rhs.insert(rhs.end(), v.begin(), v.end());
  }
  if (static_cast<int>(rhs.size()) != mdim)
    throw std::runtime_error("parse_sdpa: bad objective vector");
  prob.rhs = rhs;
  prob.constraints.resize(mdim);

  for (; pos < data_lines.size(); ++pos) {
    const auto v = numbers(data_lines[pos]);
    if (v.empty()) continue;
    if (v.size() != 5) throw std::runtime_error("parse_sdpa: bad entry line");
    const int matno = static_cast<int>(v[0]);
    const int blkno = static_cast<int>(v[1]) - 1;
    const int i = static_cast<int>(v[2]) - 1;
    const int j = static_cast<int>(v[3]) - 1;
    if (matno < 0 || matno > mdim)
      throw std::runtime_error("parse_sdpa: entry matno out of range");
    SdpCoeffs& target = matno == 0 ? prob.objective : prob.constraints[matno - 1];
    target.add(blkno, i, j, v[4]);
  }
  prob.validate();
  return prob;
}

}  // namespace polyadp
