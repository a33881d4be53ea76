#include "altruism/sde/path_io.hpp"

#include <charconv>
#include <sstream>

namespace altruism {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string path_csv(const Path& p) {
  std::ostringstream out;
  out << "t";
  for (const auto& n : p.names) out << ',' << n;
  out << '\n';
  for (std::size_t k = 0; k < p.size(); ++k) {
    out << format_double(p.times[k]);
    for (double v : p.state(k)) out << ',' << format_double(v);
    out << '\n';
  }
  return out.str();
}

}  // namespace altruism
