"""Harness 層模組：語料、實例快取、見證驗證與報表"""
from harness.corpus import CorpusEntry, load_corpus
from harness.instance import GraphInstance
from harness.records import Verdict, VerificationRecord
from harness.witness import WitnessValidator
