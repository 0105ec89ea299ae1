#pragma once

#include <stdexcept>
#include <string>

namespace exthink {

// Base error carrying a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Statement splitter found a different number of lines than requested.
// Callers may retry the generation with the same prompt.
class CountMismatch : public Error {
public:
    CountMismatch(int found_n, int expected_n)
        : Error("count-mismatch",
                "statement count mismatch: found " + std::to_string(found_n) +
                    ", expected " + std::to_string(expected_n)),
          found(found_n), expected(expected_n) {}

    int found;
    int expected;
};

// Connection-level failure (refused, timeout, DNS). Always retryable.
class TransportError : public Error {
public:
    explicit TransportError(const std::string& msg) : Error("transport", msg) {}
};

// Non-2xx HTTP response. Retryable only for 408/429/5xx.
class BackendError : public Error {
public:
    BackendError(int status_code, const std::string& excerpt)
        : Error("backend",
                "backend returned status " + std::to_string(status_code) +
                    (excerpt.empty() ? "" : ": " + excerpt)),
          status(status_code), body_excerpt(excerpt) {}

    bool retryable() const noexcept {
        return status == 408 || status == 429 || (status >= 500 && status <= 599);
    }

    int status;
    std::string body_excerpt;
};

// Thinking-budget phase 2 produced no answer text.
class EmptyAnswer : public Error {
public:
    EmptyAnswer() : Error("empty-answer", "reasoning backend returned an empty answer") {}
};

} // namespace exthink
