#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neolightning/control/keys.hpp"

namespace nl::control {

/// Decodes terminal bytes into keys: w/a/s/d, q/z, e/c, o/p (either case)
/// and the ANSI arrow sequences ESC [ A..D. Other bytes are reported as
/// ignored.
class KeyDecoder {
 public:
  struct Result {
    std::vector<Key> keys;
    std::size_t ignored = 0;
  };

  Result feed(std::string_view bytes);

 private:
  std::string pending_;
};

/// Non-blocking reader on stdin; switches a TTY into raw mode for its
/// lifetime.
class TerminalKeys {
 public:
  TerminalKeys();
  ~TerminalKeys();

  TerminalKeys(const TerminalKeys&) = delete;
  TerminalKeys& operator=(const TerminalKeys&) = delete;

  KeyDecoder::Result poll();

 private:
  KeyDecoder decoder_;
  bool restored_ = true;
  bool eof_ = false;
  struct Saved;
  std::unique_ptr<Saved> saved_;
};

}  // namespace nl::control
