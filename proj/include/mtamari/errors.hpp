#pragma once

#include <stdexcept>
#include <string>

namespace mtamari {

// Every failure raised by the library derives from mtamari::error so callers
// (the CLI in particular) can map categories to exit codes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad path strings, wrong sizes, points that are not contacts.
class invalid_input : public error {
public:
    using error::error;
};

class bad_character : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class unbalanced_path : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class below_axis : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class not_m_dyck : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class empty_path : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class size_mismatch : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class invalid_leaf : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class out_of_range : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class degenerate_evaluation : public invalid_input {
public:
    using invalid_input::invalid_input;
};

class resource_limit : public error {
public:
    using error::error;
};

// The following signal a broken mathematical claim or an implementation bug,
// never bad user input.
class check_failure : public error {
public:
    using error::error;
};

class not_a_lattice : public check_failure {
public:
    using check_failure::check_failure;
};

class non_integral : public check_failure {
public:
    using check_failure::check_failure;
};

class non_divisible : public check_failure {
public:
    using check_failure::check_failure;
};

} // namespace mtamari
