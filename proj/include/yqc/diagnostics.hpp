#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yqc {

/// Half-open byte range in the input, plus the 1-based line/column of its start.
struct SourceSpan {
    std::size_t byte_start = 0;
    std::size_t byte_end = 0;
    int line = 1;
    int column = 1;
};

inline SourceSpan join_spans(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    if (b.byte_end > s.byte_end)
        s.byte_end = b.byte_end;
    return s;
}

enum class Severity { warning, error };

struct Diagnostic {
    Severity severity = Severity::error;
    std::string message;
    SourceSpan span;
};

/// Collects warnings during a pipeline run. Hard errors are thrown as CompileError.
class DiagnosticSink {
public:
    void warn(std::string message, SourceSpan span = {}) {
        entries_.push_back({Severity::warning, std::move(message), span});
    }

    const std::vector<Diagnostic>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    void clear() { entries_.clear(); }

private:
    std::vector<Diagnostic> entries_;
};

class CompileError : public std::runtime_error {
public:
    CompileError(std::string message, SourceSpan span)
        : std::runtime_error(message), diagnostic_{Severity::error, std::move(message), span} {}

    const Diagnostic& diagnostic() const { return diagnostic_; }
    const SourceSpan& span() const { return diagnostic_.span; }

private:
    Diagnostic diagnostic_;
};

[[noreturn]] inline void fail(std::string message, SourceSpan span = {}) {
    throw CompileError(std::move(message), span);
}

} // namespace yqc
