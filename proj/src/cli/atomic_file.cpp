#include "altruism/cli/atomic_file.hpp"

#include <fstream>

#include "altruism/errors.hpp"

namespace altruism {

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, path);
}

}  // namespace altruism
