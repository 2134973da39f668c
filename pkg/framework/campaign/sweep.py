import json
import logging
from dataclasses import dataclass, replace
from typing import List

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from tqdm import tqdm

from appspec.parser import parse_file
from campaign.campaign_runner import CampaignRunner


@dataclass
class SweepPoint:
    max_length: int
    ratios: List[float]

    @property
    def mean(self):
        return float(np.mean(self.ratios))

    @property
    def sd(self):
        return float(np.std(self.ratios))

    def to_dict(self):
        return {
            "max_length": self.max_length,
            "mean": round(self.mean, 4),
            "sd": round(self.sd, 4),
            "ratios": [round(r, 4) for r in self.ratios],
        }


class LengthSweep:
    """
    Aggregated coverage as a function of the length bound: one long-walk
    campaign per (length, seed), averaged over the seeds.
    """

    def __init__(self, app_path, lengths, seeds, base_config, progress=False):
        if not lengths or not seeds:
            raise ValueError("a sweep needs at least one length and one seed")
        self.app_path = app_path
        self.lengths = sorted(set(lengths))
        self.seeds = list(seeds)
        self.base_config = base_config
        self.progress = progress
        self.points = []
        self.app_name = None

    def run(self):
        spec = parse_file(self.app_path)
        self.points = []
        total = len(self.lengths) * len(self.seeds)
        with tqdm(total=total, desc=f"Sweeping {spec.name}", unit="run", leave=False,
                  disable=not self.progress) as pbar:
            for length in self.lengths:
                ratios = []
                for seed in self.seeds:
                    build = replace(self.base_config.build, max_length=length, seed=seed)
                    config = replace(self.base_config, build=build, generator="long",
                                     report_path=None, dot_path=None, progress=False)
                    report = CampaignRunner(self.app_path, config, spec=spec).run()
                    ratios.append(report.aggregated_coverage.ratio)
                    pbar.update(1)
                point = SweepPoint(length, ratios)
                logging.info(f"Sweep {spec.name} d={length}: mean {point.mean:.4f}, sd {point.sd:.4f}")
                self.points.append(point)
        self.app_name = spec.name
        return self.points

    def to_dict(self):
        return {
            "app": self.app_name,
            "seeds": self.seeds,
            "points": [p.to_dict() for p in self.points],
        }

    def save_json(self, output_file):
        with open(output_file, "w", encoding="utf-8") as f:
            f.write(json.dumps(self.to_dict(), indent=2) + "\n")

    def save_pdf(self, output_file):
        lengths = [p.max_length for p in self.points]
        means = np.array([p.mean for p in self.points]) * 100
        sds = np.array([p.sd for p in self.points]) * 100

        plt.figure(figsize=(8, 5))
        plt.errorbar(lengths, means, yerr=sds, marker='o', capsize=4, color='steelblue')
        plt.xlabel("Max. length")
        plt.ylabel("Aggregated coverage (%)")
        plt.ylim(0, 105)
        plt.title(f"Coverage vs. length bound ({self.app_name})", fontsize=12)
        plt.grid(alpha=0.3)
        plt.tight_layout()

        plt.savefig(output_file, format="pdf", dpi=300, bbox_inches='tight')
        plt.close()
