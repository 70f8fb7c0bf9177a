// Runs the command line tool in a scratch directory and captures its
// standard output and exit status.

#ifndef RELGROUPOID_TESTS_CLI_SUPPORT_HPP_
#define RELGROUPOID_TESTS_CLI_SUPPORT_HPP_

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

  struct Result {
    int         status;
    std::string out;
  };

  class Sandbox {
   public:
    Sandbox(std::string tool, std::string const& tag)
        : _tool(std::move(tool)),
          _dir(std::filesystem::temp_directory_path()
               / ("relgroupoid_" + tag + "_" + std::to_string(::getpid()))) {
      std::filesystem::remove_all(_dir);
      std::filesystem::create_directories(_dir);
    }
    ~Sandbox() {
      std::error_code ec;
      std::filesystem::remove_all(_dir, ec);
    }
    Sandbox(Sandbox const&)            = delete;
    Sandbox& operator=(Sandbox const&) = delete;

    std::filesystem::path path(std::string const& name) const {
      return _dir / name;
    }

    void write(std::string const& name, std::string const& text) const {
      std::ofstream(path(name), std::ios::binary) << text;
    }

    std::string read(std::string const& name) const {
      std::ifstream     in(path(name), std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    // args is passed to the shell unchanged.
    Result run(std::string const& args) const {
      std::string cmd = "cd '" + _dir.string() + "' && '" + _tool + "' " + args + " 2>/dev/null";
      FILE*       p   = ::popen(cmd.c_str(), "r");
      if (p == nullptr) {
        return {-1, {}};
      }
      std::string            out;
      std::array<char, 4096> buf;
      std::size_t            n;
      while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) {
        out.append(buf.data(), n);
      }
      int status = ::pclose(p);
      return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }

   private:
    std::string           _tool;
    std::filesystem::path _dir;
  };

}  // namespace cli

#endif  // RELGROUPOID_TESTS_CLI_SUPPORT_HPP_
