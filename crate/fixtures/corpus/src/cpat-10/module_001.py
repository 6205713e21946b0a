
def step_39(cfg):
    v0_s39 = []
    for v1_s39 in range(len(v2_s39)):
        if v3_s39(v2_s39[v1_s39]):
            v0_s39 = v0_s39 + [v2_s39[v1_s39]]
    return cfg

def step_270(cfg):
    v0_s270 = []
    for v1_s270 in range(len(v2_s270)):
        if v3_s270(v2_s270[v1_s270]):
            v0_s270 = v0_s270 + [v2_s270[v1_s270]]
    return cfg

def step_501(cfg):
    v0_s501 = []
    for v1_s501 in range(len(v2_s501)):
        if v3_s501(v2_s501[v1_s501]):
            v0_s501 = v0_s501 + [v2_s501[v1_s501]]
    return cfg

def step_732(cfg):
    v0_s732 = []
    for v1_s732 in range(len(v2_s732)):
        if v3_s732(v2_s732[v1_s732]):
            v0_s732 = v0_s732 + [v2_s732[v1_s732]]
    return cfg

def step_52(cfg):
    v0_s52 = []
    for v1_s52 in range(len(v2_s52)):
        v3_s52 = v2_s52[v1_s52]
        if v4_s52(v3_s52):
            v0_s52.append(v3_s52)
    return cfg

def step_283(cfg):
    v0_s283 = []
    for v1_s283 in range(len(v2_s283)):
        v3_s283 = v2_s283[v1_s283]
        if v4_s283(v3_s283):
            v0_s283.append(v3_s283)
    return cfg

def step_514(cfg):
    v0_s514 = []
    for v1_s514 in range(len(v2_s514)):
        v3_s514 = v2_s514[v1_s514]
        if v4_s514(v3_s514):
            v0_s514.append(v3_s514)
    return cfg

def step_745(cfg):
    v0_s745 = []
    for v1_s745 in range(len(v2_s745)):
        v3_s745 = v2_s745[v1_s745]
        if v4_s745(v3_s745):
            v0_s745.append(v3_s745)
    return cfg

def step_65(cfg):
    v0_s65 = []
    for v1_s65 in range(len(v2_s65)):
        if v3_s65(v2_s65[v1_s65]):
            v0_s65 += [v2_s65[v1_s65]]
    return cfg

def step_296(cfg):
    v0_s296 = []
    for v1_s296 in range(len(v2_s296)):
        if v3_s296(v2_s296[v1_s296]):
            v0_s296 += [v2_s296[v1_s296]]
    return cfg

def step_527(cfg):
    v0_s527 = []
    for v1_s527 in range(len(v2_s527)):
        if v3_s527(v2_s527[v1_s527]):
            v0_s527 += [v2_s527[v1_s527]]
    return cfg

def step_758(cfg):
    v0_s758 = []
    for v1_s758 in range(len(v2_s758)):
        if v3_s758(v2_s758[v1_s758]):
            v0_s758 += [v2_s758[v1_s758]]
    return cfg
