/*
 * Copyright 2026 The drinfeld-level Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Some enumeration or degree guard was hit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NoUnitCoefficient : public Error {
 public:
  using Error::Error;
};

class ZeroDegreeModule : public Error {
 public:
  using Error::Error;
};

class NotCharacteristic : public Error {
 public:
  using Error::Error;
};

class KernelNotStable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace drinfeld
