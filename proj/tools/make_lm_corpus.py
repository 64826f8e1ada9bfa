# Copyright 2026 The FuseNorm Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the small normalized-text corpus used to train the demo n-gram scorer.

Usage: python3 tools/make_lm_corpus.py > core/data/lm_corpus.txt

Sentences that appear verbatim as references in tests/data/ambiguous_suite.tsv
are skipped, so the suite is never part of the training text.
"""

import pathlib
import random

MONTHS = ["January", "February", "March", "April", "May", "June", "July",
          "August", "September", "October", "November", "December"]
ORDINALS = ["first", "second", "third", "fourth", "fifth", "sixth", "seventh",
            "eighth", "ninth", "tenth", "eleventh", "twelfth", "thirteenth",
            "fourteenth", "fifteenth", "sixteenth", "seventeenth", "eighteenth",
            "nineteenth", "twentieth", "twenty first", "twenty second",
            "twenty third", "twenty fourth", "twenty fifth", "twenty sixth",
            "twenty seventh", "twenty eighth", "twenty ninth", "thirtieth"]
FRACTIONS = ["one half", "one third", "two thirds", "one quarter",
             "three quarters", "one eighth", "three eighths", "one fourth"]
UNITS = ["cup", "cups", "teaspoon", "tablespoon", "pound", "ounce"]
INGREDIENTS = ["sugar", "flour", "salt", "butter", "milk", "water", "rice",
               "oil", "honey", "cream", "cocoa", "oats"]
GROUPS = ["the voters", "the students", "the members", "the workers",
          "the class", "the population", "the people", "the team"]
KINGS = [("Henry", ["the fifth", "the sixth", "the seventh", "the eighth"]),
         ("Louis", ["the thirteenth", "the fourteenth", "the fifteenth", "the sixteenth"]),
         ("Elizabeth", ["the first", "the second"]),
         ("George", ["the third", "the fifth", "the sixth"]),
         ("Charles", ["the first", "the second", "the third"]),
         ("Richard", ["the second", "the third"]),
         ("Edward", ["the sixth", "the seventh", "the eighth"])]
CARDINALS = ["one", "two", "three", "four", "five", "six", "seven", "eight",
             "nine", "ten", "eleven", "twelve", "twenty", "twenty five", "thirty"]
YEARS = ["nineteen eighty four", "nineteen oh seven", "nineteen forty five",
         "nineteen sixty nine", "two thousand one", "twenty twenty",
         "eighteen sixty one", "nineteen ninety nine", "twenty ten",
         "nineteen oh five", "nineteen twelve"]
SITES = ["we are s c dot com", "w w w dot google dot com", "nowhere dot org",
         "w w w dot example dot com", "john dot smith at g mail dot com",
         "help at example dot org", "my site dot net", "the news dot com"]
PLACES = ["Tampa", "Miami", "Detroit", "Boston", "Houston", "Atlanta"]
EVENTS = ["meeting", "exam", "party", "game", "concert", "interview", "trial"]
SUBJECTS = ["The train", "The bus", "Our flight", "The ferry", "The boat"]


def date(r):
  return f"{r.choice(MONTHS)} {r.choice(ORDINALS)}"


def sentence(r):
  kind = r.randrange(12)
  if kind == 0:
    return f"{r.choice(SUBJECTS)} leaves on {date(r)}."
  if kind == 1:
    return f"The {r.choice(EVENTS)} is on {date(r)} at noon."
  if kind == 2:
    return f"The {r.choice(EVENTS)} is scheduled for {date(r)}."
  if kind == 3:
    return r.choice([f"Her birthday is on {date(r)}.", f"We moved in on {date(r)}.",
                     f"The deadline is {date(r)}.", f"His birthday is {date(r)}.",
                     f"They arrived on {date(r)} {r.choice(YEARS)}."])
  if kind == 4:
    verb = r.choice(["Add", "Mix in", "Stir in", "Use", "Pour in", "Fold in"])
    return (f"{verb} {r.choice(FRACTIONS)} {r.choice(UNITS)} of "
            f"{r.choice(INGREDIENTS)}.")
  if kind == 5:
    return (f"What's {r.choice(FRACTIONS)} cup plus {r.choice(FRACTIONS)} cup?")
  if kind == 6:
    lead = r.choice(["About", "Only", "Nearly", "More than", "Less than"])
    return f"{lead} {r.choice(FRACTIONS)} of {r.choice(GROUPS)} agreed."
  if kind == 7:
    name, titles = r.choice(KINGS)
    verb = r.choice(["ruled for years", "built the palace", "had six wives",
                     "visited the city", "was crowned king", "died young"])
    if name == "Elizabeth":
      name = "Queen Elizabeth"
    return f"{name} {r.choice(titles)} {verb}."
  if kind == 8:
    return r.choice([
        f"World War {r.choice(['one', 'two'])} ended in {r.choice(YEARS)}.",
        f"Chapter {r.choice(CARDINALS)} begins here.",
        f"Read chapter {r.choice(CARDINALS)} tonight.",
        f"Super Bowl {r.choice(CARDINALS)} was played in {r.choice(PLACES)}.",
        f"Part {r.choice(CARDINALS)} of the series is better."])
  if kind == 9:
    return r.choice([f"He was born in {r.choice(YEARS)}.",
                     f"The bridge opened in {r.choice(YEARS)}.",
                     f"The war ended in {r.choice(YEARS)}.",
                     f"She graduated in {r.choice(YEARS)}."])
  if kind == 10:
    return r.choice([f"Visit {r.choice(SITES)} for details.",
                     f"Send it to {r.choice(SITES)} today.",
                     f"Our site is {r.choice(SITES)} now.",
                     f"Check {r.choice(SITES)} for updates."])
  return r.choice([
      "The weather was cold and the roads were closed.",
      "We walked to the market after lunch.",
      "She plans to read the report tonight.",
      "The students passed the test with ease.",
      "Most of the voters agreed with the plan.",
      "The recipe needs fresh herbs and lemon juice.",
      "He called his mother on the way home.",
      "The game was played in front of a large crowd.",
      "They opened a new office in the city.",
      "Preheat the oven before you begin."])


def held_out():
  suite = pathlib.Path(__file__).resolve().parent.parent / "tests/data/ambiguous_suite.tsv"
  refs = set()
  for line in suite.read_text(encoding="utf-8").splitlines():
    if line and not line.startswith("#"):
      refs.add(line.split("\t")[1])
  return refs


def main():
  skip = held_out()
  r = random.Random(20260101)
  written = 0
  while written < 1000:
    s = sentence(r)
    if s in skip:
      continue
    print(s)
    written += 1


if __name__ == "__main__":
  main()
