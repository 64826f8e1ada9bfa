// Copyright 2026 The FuseNorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FUSENORM_TEXT_UTIL_H_
#define FUSENORM_TEXT_UTIL_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusenorm {

std::vector<std::string> SplitWhitespace(std::string_view text);
std::vector<std::string> SplitOn(std::string_view text, char sep);
std::string Join(std::span<const std::string> parts, std::string_view sep = " ");
std::string ToLowerAscii(std::string_view text);
std::string_view TrimAscii(std::string_view text);

bool IsDigits(std::string_view text);
bool IsAlphaAscii(std::string_view text);
bool IsUpperAscii(std::string_view text);
bool IsLowerAscii(std::string_view text);
bool IsPunctuationChar(char c);
// True when every byte is ASCII punctuation or a non-ASCII symbol byte.
bool IsPunctuationToken(std::string_view text);

}  // namespace fusenorm

#endif  // FUSENORM_TEXT_UTIL_H_
