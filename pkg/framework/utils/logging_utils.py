import os
import logging

LOG_FILE = "longseq_log.txt"


def setup_logging(output_folder, level=logging.DEBUG):
    os.makedirs(output_folder, exist_ok=True)
    log_file = os.path.join(output_folder, LOG_FILE)
    logging.basicConfig(filename=log_file, level=level,
                        format='%(asctime)s - %(levelname)s - %(message)s')
    return log_file
