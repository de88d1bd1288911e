#ifndef GWSYM_ERRORS_HPP
#define GWSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gwsym {

struct FieldMismatch : std::invalid_argument {
    explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

struct Degenerate : std::invalid_argument {
    explicit Degenerate(const std::string& what) : std::invalid_argument(what) {}
};

struct NotIndependent : std::invalid_argument {
    explicit NotIndependent(const std::string& what) : std::invalid_argument(what) {}
};

struct NotInvertible : std::invalid_argument {
    explicit NotInvertible(const std::string& what) : std::invalid_argument(what) {}
};

struct NotEffective : std::invalid_argument {
    explicit NotEffective(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), pos(position) {}
    std::size_t pos;
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gwsym

#endif
