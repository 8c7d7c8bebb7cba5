#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gentle/bound_quiver.hpp"

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus_path(const std::string& name) {
  return std::string(GENTLE_CORPUS_DIR) + "/" + name + ".quiver";
}

inline gentle::BoundQuiver load_corpus(const std::string& name) {
  return gentle::parse_quiver(read_file(corpus_path(name)));
}

inline gentle::BoundQuiver inline_quiver(const std::string& text) {
  return gentle::parse_quiver(text);
}

// Linear A3, used for cases the corpus does not cover.
inline const char* kA3 =
    "algebra a3\n"
    "vertices: 1 2 3\n"
    "arrow a: 2 -> 1\n"
    "arrow b: 3 -> 2\n";

// Two parallel arrows, the smallest algebra with a band.
inline const char* kKronecker =
    "algebra kron\n"
    "vertices: 1 2\n"
    "arrow a: 2 -> 1\n"
    "arrow b: 2 -> 1\n";
