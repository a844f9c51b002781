#pragma once

#include <stdexcept>
#include <string>

namespace textclf {

// Base of everything thrown by this library. CLI maps these to exit code 2
// (data/validation) except internal_error, which maps to 3.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input row: wrong column count, invalid JSON, bad header.
class parse_error : public error {
public:
    parse_error(const std::string& path, std::size_t line, const std::string& what)
        : error(path + ":" + std::to_string(line) + ": " + what) {}
    explicit parse_error(const std::string& what) : error(what) {}
};

// A label string that is not a class name of the active schema.
class schema_error : public error {
public:
    using error::error;
};

// Structural violations: duplicate ids, empty ids, provenance mismatch.
class validation_error : public error {
public:
    using error::error;
};

// Out-of-range or inconsistent arguments (bad fraction, dim mismatch, ...).
class argument_error : public error {
public:
    using error::error;
};

// Vocabulary fitting on an empty corpus.
class fit_error : public error {
public:
    using error::error;
};

// Trainer preconditions violated (empty data).
class train_error : public error {
public:
    using error::error;
};

// Non-finite values reached during optimization; message names the epoch.
class numeric_error : public error {
public:
    using error::error;
};

// File system trouble: missing file, unreadable, unwritable.
class io_error : public error {
public:
    using error::error;
};

// Corrupt or version-mismatched artifact files (models, vocabularies).
class load_error : public error {
public:
    using error::error;
};

// Prediction-file scoring problems: missing/duplicate ids, unknown labels.
class scoring_error : public error {
public:
    using error::error;
};

// A bug or environment failure, not a data problem. CLI exit code 3.
class internal_error : public error {
public:
    using error::error;
};

} // namespace textclf
