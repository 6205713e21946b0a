
def step_78(cfg):
    v0_s78 = []
    for v1_s78 in range(len(v2_s78)):
        if v3_s78(v2_s78[v1_s78]):
            v0_s78 = v0_s78 + [v2_s78[v1_s78]]
    return cfg

def step_309(cfg):
    v0_s309 = []
    for v1_s309 in range(len(v2_s309)):
        if v3_s309(v2_s309[v1_s309]):
            v0_s309 = v0_s309 + [v2_s309[v1_s309]]
    return cfg

def step_540(cfg):
    v0_s540 = []
    for v1_s540 in range(len(v2_s540)):
        if v3_s540(v2_s540[v1_s540]):
            v0_s540 = v0_s540 + [v2_s540[v1_s540]]
    return cfg

def step_771(cfg):
    v0_s771 = []
    for v1_s771 in range(len(v2_s771)):
        if v3_s771(v2_s771[v1_s771]):
            v0_s771 = v0_s771 + [v2_s771[v1_s771]]
    return cfg

def step_91(cfg):
    v0_s91 = []
    for v1_s91 in range(len(v2_s91)):
        v3_s91 = v2_s91[v1_s91]
        if v4_s91(v3_s91):
            v0_s91.append(v3_s91)
    return cfg

def step_322(cfg):
    v0_s322 = []
    for v1_s322 in range(len(v2_s322)):
        v3_s322 = v2_s322[v1_s322]
        if v4_s322(v3_s322):
            v0_s322.append(v3_s322)
    return cfg

def step_553(cfg):
    v0_s553 = []
    for v1_s553 in range(len(v2_s553)):
        v3_s553 = v2_s553[v1_s553]
        if v4_s553(v3_s553):
            v0_s553.append(v3_s553)
    return cfg

def step_784(cfg):
    v0_s784 = []
    for v1_s784 in range(len(v2_s784)):
        v3_s784 = v2_s784[v1_s784]
        if v4_s784(v3_s784):
            v0_s784.append(v3_s784)
    return cfg

def step_104(cfg):
    v0_s104 = []
    for v1_s104 in range(len(v2_s104)):
        if v3_s104(v2_s104[v1_s104]):
            v0_s104 += [v2_s104[v1_s104]]
    return cfg

def step_335(cfg):
    v0_s335 = []
    for v1_s335 in range(len(v2_s335)):
        if v3_s335(v2_s335[v1_s335]):
            v0_s335 += [v2_s335[v1_s335]]
    return cfg

def step_566(cfg):
    v0_s566 = []
    for v1_s566 in range(len(v2_s566)):
        if v3_s566(v2_s566[v1_s566]):
            v0_s566 += [v2_s566[v1_s566]]
    return cfg

def step_797(cfg):
    v0_s797 = []
    for v1_s797 in range(len(v2_s797)):
        if v3_s797(v2_s797[v1_s797]):
            v0_s797 += [v2_s797[v1_s797]]
    return cfg
