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

#ifndef CARDPREP_ERROR_HPP
#define CARDPREP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cardprep {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data (bad PGM header, bad regions/truth line, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input shorter than its header promises.
class LengthError : public Error {
public:
    using Error::Error;
};

/// Rectangle or coordinate outside the image.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's contract (angle too large, empty rect, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration value or key.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure (missing or unreadable file).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace cardprep

#endif // CARDPREP_ERROR_HPP
