#ifndef SIGSCOPE_ERRORS_HPP
#define SIGSCOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigscope {

/// Failure categories surfaced by the library. The CLI maps Parse, Validation,
/// NotInTree, EmptyTree, BoundsTooLarge, ImproperIdeal, NotPositive, NotSmall,
/// MethodMismatch and EmptySection to exit code 2, InternalSoundness to 3.
enum class Errc {
    NotInTree,
    EmptyTree,
    BoundsTooLarge,
    ImproperIdeal,
    NotPositive,
    NotSmall,
    MethodMismatch,
    EmptySection,
    InternalSoundness,
    Parse,
    Validation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sigscope

#endif
