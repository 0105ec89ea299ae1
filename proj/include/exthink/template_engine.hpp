#pragma once

#include <map>
#include <string>
#include <vector>

namespace exthink {

// Values available to a template render. Sections look up `lists` first
// (repeated render, one pass per item) and fall back to `flags`
// (conditional inclusion). Variable lookups inside a list item fall back
// to the enclosing context.
struct TemplateContext {
    std::map<std::string, std::string> vars;
    std::map<std::string, bool> flags;
    std::map<std::string, std::vector<TemplateContext>> lists;
};

// Minimal template language: {{name}} substitutes a variable verbatim,
// {{#name}}...{{/name}} repeats over a list or gates on a flag.
// Substituted values are emitted as-is and never re-scanned, so user text
// containing marker-like sequences passes through untouched.
class Template {
public:
    static Template parse(std::string body);

    // Throws Error("template-unbound") when a placeholder has no value.
    std::string render(const TemplateContext& ctx) const;

    const std::string& body() const { return body_; }

private:
    struct Node {
        enum class Kind { Text, Var, Section };
        Kind kind = Kind::Text;
        std::string value; // literal text, or variable/section name
        std::vector<Node> children;
    };

    std::string body_;
    std::vector<Node> nodes_;
};

} // namespace exthink
