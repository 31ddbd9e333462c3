#pragma once

#include <stdexcept>
#include <string>

namespace cbench {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class KeyLengthError : public Error { public: using Error::Error; };
class NonceLengthError : public Error { public: using Error::Error; };
class CounterOverflowError : public Error { public: using Error::Error; };
class LengthError : public Error { public: using Error::Error; };
class PaddingError : public Error { public: using Error::Error; };
class FormatError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };
class ZeroElapsedError : public Error { public: using Error::Error; };
class ZeroSizeError : public Error { public: using Error::Error; };
class IncompleteGridError : public Error { public: using Error::Error; };

} // namespace cbench
