/*
 * Copyright 2026 The cardprep authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cardprep/memtrack.hpp"

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <new>

namespace {

// Zero-initialized before any dynamic initialization, so tracking is valid
// from the very first allocation.
constinit std::atomic<std::uint64_t> g_current{0};
constinit std::atomic<std::uint64_t> g_high_water{0};

void track_add(std::size_t n) {
    const std::uint64_t cur =
        g_current.fetch_add(n, std::memory_order_relaxed) + n;
    std::uint64_t hw = g_high_water.load(std::memory_order_relaxed);
    while (cur > hw &&
           !g_high_water.compare_exchange_weak(hw, cur, std::memory_order_relaxed)) {
    }
}

void track_sub(std::size_t n) {
    g_current.fetch_sub(n, std::memory_order_relaxed);
}

// Every block is prefixed by a header recording the requested size and the
// distance back to the raw malloc pointer; over-aligned requests get slack.
struct Header {
    std::size_t size;
    std::size_t offset;
};
static_assert(sizeof(Header) <= 2 * alignof(std::max_align_t));

void* tracked_alloc(std::size_t n, std::size_t alignment) noexcept {
    if (alignment < alignof(std::max_align_t)) {
        alignment = alignof(std::max_align_t);
    }
    const std::size_t slack = sizeof(Header) + alignment;
    void* raw = std::malloc(n + slack);
    if (raw == nullptr) {
        return nullptr;
    }
    const auto base = reinterpret_cast<std::uintptr_t>(raw) + sizeof(Header);
    const std::uintptr_t user = (base + alignment - 1) & ~(alignment - 1);
    auto* h = reinterpret_cast<Header*>(user) - 1;
    h->size = n;
    h->offset = user - reinterpret_cast<std::uintptr_t>(raw);
    track_add(n);
    return reinterpret_cast<void*>(user);
}

void tracked_free(void* p) noexcept {
    if (p == nullptr) {
        return;
    }
    auto* h = reinterpret_cast<Header*>(p) - 1;
    track_sub(h->size);
    std::free(reinterpret_cast<char*>(p) - h->offset);
}

void* alloc_or_throw(std::size_t n, std::size_t alignment) {
    for (;;) {
        if (void* p = tracked_alloc(n, alignment)) {
            return p;
        }
        std::new_handler handler = std::get_new_handler();
        if (handler == nullptr) {
            throw std::bad_alloc();
        }
        handler();
    }
}

} // namespace

namespace cardprep::memtrack {

std::uint64_t current_bytes() {
    return g_current.load(std::memory_order_relaxed);
}

std::uint64_t high_water_bytes() {
    return g_high_water.load(std::memory_order_relaxed);
}

void reset_high_water() {
    g_high_water.store(g_current.load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
}

} // namespace cardprep::memtrack

void* operator new(std::size_t n) { return alloc_or_throw(n, 0); }
void* operator new[](std::size_t n) { return alloc_or_throw(n, 0); }
void* operator new(std::size_t n, std::align_val_t a) {
    return alloc_or_throw(n, static_cast<std::size_t>(a));
}
void* operator new[](std::size_t n, std::align_val_t a) {
    return alloc_or_throw(n, static_cast<std::size_t>(a));
}
void* operator new(std::size_t n, const std::nothrow_t&) noexcept {
    return tracked_alloc(n, 0);
}
void* operator new[](std::size_t n, const std::nothrow_t&) noexcept {
    return tracked_alloc(n, 0);
}
void* operator new(std::size_t n, std::align_val_t a, const std::nothrow_t&) noexcept {
    return tracked_alloc(n, static_cast<std::size_t>(a));
}
void* operator new[](std::size_t n, std::align_val_t a, const std::nothrow_t&) noexcept {
    return tracked_alloc(n, static_cast<std::size_t>(a));
}

void operator delete(void* p) noexcept { tracked_free(p); }
void operator delete[](void* p) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::align_val_t) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept {
    tracked_free(p);
}
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept {
    tracked_free(p);
}
void operator delete(void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t, const std::nothrow_t&) noexcept {
    tracked_free(p);
}
void operator delete[](void* p, std::align_val_t, const std::nothrow_t&) noexcept {
    tracked_free(p);
}
