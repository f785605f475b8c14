#include "neolightning/control/terminal_keys.hpp"

#include <poll.h>
#include <termios.h>
#include <unistd.h>

#include <cctype>

namespace nl::control {

KeyDecoder::Result KeyDecoder::feed(std::string_view bytes) {
  Result result;
  pending_.append(bytes);
  std::size_t i = 0;
  while (i < pending_.size()) {
    const char c = pending_[i];
    if (c == '\x1b') {
      if (pending_.size() - i < 3) break;  // wait for the rest of the sequence
      if (pending_[i + 1] == '[') {
        switch (pending_[i + 2]) {
          case 'A': result.keys.push_back(Key::Up); break;
          case 'B': result.keys.push_back(Key::Down); break;
          case 'C': result.keys.push_back(Key::Right); break;
          case 'D': result.keys.push_back(Key::Left); break;
          default: ++result.ignored; break;
        }
        i += 3;
      } else {
        ++result.ignored;
        i += 1;
      }
      continue;
    }
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'w': result.keys.push_back(Key::W); break;
      case 'a': result.keys.push_back(Key::A); break;
      case 's': result.keys.push_back(Key::S); break;
      case 'd': result.keys.push_back(Key::D); break;
      case 'q': result.keys.push_back(Key::Q); break;
      case 'z': result.keys.push_back(Key::Z); break;
      case 'e': result.keys.push_back(Key::E); break;
      case 'c': result.keys.push_back(Key::C); break;
      case 'o': result.keys.push_back(Key::O); break;
      case 'p': result.keys.push_back(Key::P); break;
      case '\n':
      case '\r':
        break;
      default: ++result.ignored; break;
    }
    ++i;
  }
  pending_.erase(0, i);
  return result;
}

struct TerminalKeys::Saved {
  termios attrs{};
};

TerminalKeys::TerminalKeys() : saved_(std::make_unique<Saved>()) {
  if (::isatty(STDIN_FILENO) && ::tcgetattr(STDIN_FILENO, &saved_->attrs) == 0) {
    termios raw = saved_->attrs;
    raw.c_lflag &= static_cast<tcflag_t>(~(ICANON | ECHO));
    raw.c_cc[VMIN] = 0;
    raw.c_cc[VTIME] = 0;
    if (::tcsetattr(STDIN_FILENO, TCSANOW, &raw) == 0) restored_ = false;
  }
}

TerminalKeys::~TerminalKeys() {
  if (!restored_) ::tcsetattr(STDIN_FILENO, TCSANOW, &saved_->attrs);
}

KeyDecoder::Result TerminalKeys::poll() {
  if (eof_) return {};
  pollfd pfd{STDIN_FILENO, POLLIN, 0};
  if (::poll(&pfd, 1, 0) <= 0) return {};
  char buffer[256];
  const auto n = ::read(STDIN_FILENO, buffer, sizeof(buffer));
  if (n <= 0) {
    eof_ = n == 0;
    return {};
  }
  return decoder_.feed(std::string_view(buffer, static_cast<std::size_t>(n)));
}

}  // namespace nl::control
