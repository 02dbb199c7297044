// SPDX-License-Identifier: Apache-2.0

#include "cellfree/diagnostics.hpp"

#include <iostream>
#include <memory>
#include <mutex>

namespace cellfree {
namespace {

std::mutex& stderr_mutex() {
    static std::mutex m;
    return m;
}

void default_handler(const Warning& w) {
    std::lock_guard lock(stderr_mutex());
    std::cerr << "warning[" << to_string(w.kind) << "]: " << w.message << '\n';
}

struct HandlerSlot {
    std::mutex mutex;
    std::shared_ptr<const WarningHandler> handler =
        std::make_shared<const WarningHandler>(default_handler);
};

HandlerSlot& slot() {
    static HandlerSlot s;
    return s;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    auto next = std::make_shared<const WarningHandler>(std::move(handler));
    std::lock_guard lock(slot().mutex);
    WarningHandler previous = *slot().handler;
    slot().handler = std::move(next);
    return previous;
}

void emit_warning(const Warning& warning) {
    std::shared_ptr<const WarningHandler> handler;
    {
        std::lock_guard lock(slot().mutex);
        handler = slot().handler;
    }
    if (*handler) (*handler)(warning);
}

const char* to_string(WarningKind kind) noexcept {
    switch (kind) {
    case WarningKind::outside_validity_domain: return "outside_validity_domain";
    case WarningKind::truncation_insufficient: return "truncation_insufficient";
    }
    return "unknown";
}

}  // namespace cellfree
